#pragma once

#include <cstdint>

namespace probelab {

// splitmix64 finalizer, used for seed derivation
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Deterministic generator (xoshiro256**). Identical seeds produce identical
/// streams on every platform, which the experiment harness relies on.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed) {
        s_[0] = mix64(seed);
        s_[1] = mix64(seed ^ 0xbf58476d1ce4e5b9ULL);
        s_[2] = mix64(seed + 0x94d049bb133111ebULL);
        s_[3] = mix64(~seed);
        if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // uniform in [0, bound), bound > 0
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (-bound) % bound;
        for (;;) {
            std::uint64_t x = next();
            if (x >= threshold) return x % bound;
        }
    }

    // uniform in [0, 1)
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // independent child stream, derived deterministically
    Rng fork(std::uint64_t stream) const {
        return Rng(mix64(seed_ ^ mix64(stream + 0x5851f42d4c957f2dULL)));
    }

    std::uint64_t seed() const { return seed_; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t seed_;
    std::uint64_t s_[4];
};

} // namespace probelab
