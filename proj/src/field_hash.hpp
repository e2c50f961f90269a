#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rng.hpp"

namespace probelab {

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// A prime p with 5 <= p < 2^31, so every product of two residues fits in
/// 64 bits.
class PrimeModulus {
public:
    explicit PrimeModulus(std::uint64_t p);
    std::uint32_t value() const { return p_; }
    friend bool operator==(PrimeModulus a, PrimeModulus b) { return a.p_ == b.p_; }

private:
    std::uint32_t p_;
};

/// Smallest prime >= lower with p == residue (mod modulus). Throws
/// no_prime_error if none exists below lower + 10^7.
PrimeModulus next_prime_congruent(std::uint64_t lower, std::uint64_t residue,
                                  std::uint64_t modulus);

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// m with a*m == 1 (mod p), for a in 1..p-1.
std::uint32_t mod_inverse(std::uint32_t a, PrimeModulus p);

enum class Family { Polynomial, CarterWegman, Star };

const char* family_name(Family f);
Family family_from_name(std::string_view name);

/// Degree k-1 polynomial over GF(p), reduced mod r. k-wise independent,
/// (r/p)/r-approximately uniform on [r].
struct PolynomialHash {
    PolynomialHash(PrimeModulus p, std::uint32_t r, std::vector<std::uint32_t> coeffs);
    std::uint32_t eval(std::uint64_t x) const;
    std::uint32_t k() const { return static_cast<std::uint32_t>(coeffs.size()); }

    PrimeModulus p;
    std::uint32_t r;
    std::vector<std::uint32_t> coeffs; // c_0 .. c_{k-1}, lowest degree first
};

/// x -> ((a*x + b) mod p) mod r with a != 0.
struct CWHash {
    CWHash(PrimeModulus p, std::uint32_t r, std::uint32_t a, std::uint32_t b);
    std::uint32_t eval(std::uint64_t x) const;

    PrimeModulus p;
    std::uint32_t r, a, b;
};

/// The patched variant of CWHash: a may be zero and a per-key table v of
/// values in [p_hat], p_hat = ceil(p/r)*r, makes function values exactly
/// uniform on [r] and the family pairwise independent.
struct StarHash {
    StarHash(PrimeModulus p, std::uint32_t r, std::uint32_t a, std::uint32_t b,
             std::vector<std::uint32_t> v,
             std::optional<std::uint64_t> v_seed = std::nullopt);
    static StarHash from_seed(PrimeModulus p, std::uint32_t r, std::uint32_t a,
                              std::uint32_t b, std::uint64_t v_seed);
    std::uint32_t eval(std::uint64_t x) const;
    std::uint32_t p_hat() const;

    PrimeModulus p;
    std::uint32_t r, a, b;
    std::vector<std::uint32_t> v;
    std::optional<std::uint64_t> v_seed; // set when sampled or parsed
};

/// A sampled member of one of the families, with its metadata.
class HashFunction {
public:
    HashFunction(PolynomialHash h) : fn_(std::move(h)) {}
    HashFunction(CWHash h) : fn_(std::move(h)) {}
    HashFunction(StarHash h) : fn_(std::move(h)) {}

    std::uint32_t operator()(std::uint64_t x) const;
    Family family() const;
    std::uint32_t range() const;
    std::uint32_t prime() const;
    std::uint32_t independence() const; // k
    /// Approximate-uniformity slack as used by the bound formulas: the
    /// family is (eps/r)-approximately uniform with eps = r/p (0 for star).
    double epsilon() const;

    /// Canonical text form: family,k,p,r,<params...>
    std::string serialize() const;
    static HashFunction parse(const std::string& text);

    template <class T> const T* get_if() const { return std::get_if<T>(&fn_); }

private:
    std::variant<PolynomialHash, CWHash, StarHash> fn_;
};

/// Draws a uniform member of the requested family. Identical generator
/// state yields an identical function.
HashFunction sample(Family kind, std::uint32_t k, PrimeModulus p, std::uint32_t r,
                    Rng& rng);

} // namespace probelab
