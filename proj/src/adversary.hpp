#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "bounds.hpp"
#include "field_hash.hpp"
#include "rng.hpp"

namespace probelab {

/// A worst-case insertion set for pairwise-independent linear probing:
/// [p] is cut into 8 consecutive parts of near-equal size and the key set is
/// the union of two of them; the table size is ceil(p/2).
struct AdversaryInstance {
    PrimeModulus p;
    std::uint32_t r; // ceil(p/2)
    std::array<std::pair<std::uint32_t, std::uint32_t>, 8> parts; // (start, length)
    int first, second; // selected part indices, 0-based

    std::vector<std::uint64_t> keys() const;
};

/// Fixed pair of parts. Requires p >= 1000, p == 1 (mod 4), part1 != part2.
AdversaryInstance build_instance(PrimeModulus p, int part1, int part2);

/// Random pair of parts (uniform over the 28 unordered pairs).
AdversaryInstance build_instance(PrimeModulus p, Rng& rng);

/// Decomposes the image {((a*x+b) mod p) mod r : x in U} of the integer
/// interval U = [u_start, u_start+u_len) into cyclic intervals modulo r.
/// Uses m = a^{-1} mod p: stride-m progressions in U map to intervals mod p,
/// which split across the mod-r reduction. Multiset coverage equals the
/// multiset of hash values.
bounds::IntervalSet decompose_image(std::uint32_t u_start, std::uint32_t u_len,
                                    std::uint32_t a, std::uint32_t b,
                                    PrimeModulus p, std::uint32_t r);

struct AdversaryTrial {
    std::uint64_t total_steps;
    std::uint32_t a, b;
    std::uint32_t m; // a^{-1} mod p, 0 when a == 0 (star family only)
};

struct AdversaryStats {
    std::vector<AdversaryTrial> trials;
    double mean() const;
    double stddev() const;
};

/// One trial: insert all keys of the instance into a fresh linear table of
/// size r using the given function; returns the total insertion steps.
AdversaryTrial run_trial(const AdversaryInstance& inst, const HashFunction& h);

/// Samples one function per trial (cw or star) and measures the insertion
/// cost of the fixed instance.
AdversaryStats measure_cost(const AdversaryInstance& inst, Family kind, int trials,
                            Rng& rng);

} // namespace probelab
