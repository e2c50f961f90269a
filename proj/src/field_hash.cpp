#include "field_hash.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"

namespace probelab {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % m);
}

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) {
    a %= n;
    if (a == 0) return true;
    std::uint64_t x = 1;
    // a^d mod n
    std::uint64_t base = a, e = d;
    while (e) {
        if (e & 1) x = mul_mod(x, base, n);
        base = mul_mod(base, base, n);
        e >>= 1;
    }
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                            23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // witness set covering the full 64-bit range
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                            23ULL, 29ULL, 31ULL, 37ULL}) {
        if (!miller_rabin_witness(n, a, d, s)) return false;
    }
    return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p) {
    if (p < 5 || p >= (1ULL << 31))
        throw std::domain_error("PrimeModulus: p must satisfy 5 <= p < 2^31");
    if (!is_prime(p))
        throw std::domain_error("PrimeModulus: p is not prime");
    p_ = static_cast<std::uint32_t>(p);
}

PrimeModulus next_prime_congruent(std::uint64_t lower, std::uint64_t residue,
                                  std::uint64_t modulus) {
    if (modulus == 0 || residue >= modulus)
        throw std::domain_error("next_prime_congruent: need 0 <= residue < modulus");
    if (lower < 5)
        throw std::domain_error("next_prime_congruent: lower must be >= 5");
    std::uint64_t c = lower + (residue + modulus - lower % modulus) % modulus;
    const std::uint64_t limit = lower + 10'000'000ULL;
    for (; c <= limit; c += modulus) {
        if (is_prime(c)) return PrimeModulus(c);
    }
    throw no_prime_error("next_prime_congruent: no prime found below lower + 10^7");
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t result = 1 % mod;
    base %= mod;
    while (exp) {
        if (exp & 1) result = mul_mod(result, base, mod);
        base = mul_mod(base, base, mod);
        exp >>= 1;
    }
    return result;
}

std::uint32_t mod_inverse(std::uint32_t a, PrimeModulus p) {
    if (a == 0 || a >= p.value())
        throw std::domain_error("mod_inverse: a must be in 1..p-1");
    return static_cast<std::uint32_t>(mod_pow(a, p.value() - 2, p.value()));
}

const char* family_name(Family f) {
    switch (f) {
        case Family::Polynomial: return "poly";
        case Family::CarterWegman: return "cw";
        case Family::Star: return "star";
    }
    return "?";
}

Family family_from_name(std::string_view name) {
    if (name == "poly" || name == "polynomial") return Family::Polynomial;
    if (name == "cw") return Family::CarterWegman;
    if (name == "star") return Family::Star;
    throw std::invalid_argument("unknown hash family: " + std::string(name));
}

PolynomialHash::PolynomialHash(PrimeModulus p_, std::uint32_t r_,
                               std::vector<std::uint32_t> coeffs_)
    : p(p_), r(r_), coeffs(std::move(coeffs_)) {
    if (r == 0 || r > p.value())
        throw std::domain_error("PolynomialHash: need 1 <= r <= p");
    if (coeffs.empty() || coeffs.size() > 5)
        throw std::invalid_argument("PolynomialHash: k must be in 1..5");
    for (std::uint32_t c : coeffs)
        if (c >= p.value())
            throw std::domain_error("PolynomialHash: coefficient out of [p]");
}

std::uint32_t PolynomialHash::eval(std::uint64_t x) const {
    const std::uint64_t pp = p.value();
    if (x >= pp) throw std::domain_error("PolynomialHash::eval: x out of [p]");
    // Horner, highest coefficient first, every intermediate reduced mod p
    std::uint64_t acc = coeffs.back();
    for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
        acc = (acc * x + coeffs[i]) % pp;
    }
    return static_cast<std::uint32_t>(acc % r);
}

CWHash::CWHash(PrimeModulus p_, std::uint32_t r_, std::uint32_t a_, std::uint32_t b_)
    : p(p_), r(r_), a(a_), b(b_) {
    if (r == 0 || r > p.value())
        throw std::domain_error("CWHash: need 1 <= r <= p");
    if (a == 0 || a >= p.value())
        throw std::domain_error("CWHash: a must be in 1..p-1");
    if (b >= p.value())
        throw std::domain_error("CWHash: b out of [p]");
}

std::uint32_t CWHash::eval(std::uint64_t x) const {
    const std::uint64_t pp = p.value();
    if (x >= pp) throw std::domain_error("CWHash::eval: x out of [p]");
    return static_cast<std::uint32_t>(((static_cast<std::uint64_t>(a) * x + b) % pp) % r);
}

StarHash::StarHash(PrimeModulus p_, std::uint32_t r_, std::uint32_t a_,
                   std::uint32_t b_, std::vector<std::uint32_t> v_,
                   std::optional<std::uint64_t> v_seed_)
    : p(p_), r(r_), a(a_), b(b_), v(std::move(v_)), v_seed(v_seed_) {
    if (r == 0 || r > p.value())
        throw std::domain_error("StarHash: need 1 <= r <= p");
    if (a >= p.value() || b >= p.value())
        throw std::domain_error("StarHash: a, b out of [p]");
    if (v.size() != p.value())
        throw std::domain_error("StarHash: v must have exactly p entries");
    const std::uint32_t ph = p_hat();
    for (std::uint32_t e : v)
        if (e >= ph) throw std::domain_error("StarHash: v entry out of [p_hat]");
}

StarHash StarHash::from_seed(PrimeModulus p, std::uint32_t r, std::uint32_t a,
                             std::uint32_t b, std::uint64_t v_seed) {
    const std::uint32_t ph = ((p.value() + r - 1) / r) * r;
    Rng vr(v_seed);
    std::vector<std::uint32_t> v(p.value());
    for (auto& e : v) e = static_cast<std::uint32_t>(vr.below(ph));
    return StarHash(p, r, a, b, std::move(v), v_seed);
}

std::uint32_t StarHash::p_hat() const {
    return ((p.value() + r - 1) / r) * r;
}

std::uint32_t StarHash::eval(std::uint64_t x) const {
    const std::uint64_t pp = p.value();
    if (x >= pp) throw std::domain_error("StarHash::eval: x out of [p]");
    const std::uint32_t vx = v[static_cast<std::size_t>(x)];
    if (vx >= pp) return vx % r;
    const std::uint64_t y = (static_cast<std::uint64_t>(a) * x + b) % pp;
    return static_cast<std::uint32_t>(y % r);
}

std::uint32_t HashFunction::operator()(std::uint64_t x) const {
    return std::visit([x](const auto& h) { return h.eval(x); }, fn_);
}

Family HashFunction::family() const {
    if (std::holds_alternative<PolynomialHash>(fn_)) return Family::Polynomial;
    if (std::holds_alternative<CWHash>(fn_)) return Family::CarterWegman;
    return Family::Star;
}

std::uint32_t HashFunction::range() const {
    return std::visit([](const auto& h) { return h.r; }, fn_);
}

std::uint32_t HashFunction::prime() const {
    return std::visit([](const auto& h) { return h.p.value(); }, fn_);
}

std::uint32_t HashFunction::independence() const {
    if (const auto* ph = std::get_if<PolynomialHash>(&fn_)) return ph->k();
    return 2;
}

double HashFunction::epsilon() const {
    if (family() == Family::Star) return 0.0; // exactly uniform
    return static_cast<double>(range()) / prime();
}

std::string HashFunction::serialize() const {
    std::ostringstream out;
    if (const auto* h = std::get_if<PolynomialHash>(&fn_)) {
        out << "poly," << h->k() << ',' << h->p.value() << ',' << h->r;
        for (std::uint32_t c : h->coeffs) out << ',' << c;
    } else if (const auto* h = std::get_if<CWHash>(&fn_)) {
        out << "cw,2," << h->p.value() << ',' << h->r << ',' << h->a << ',' << h->b;
    } else {
        const auto& sh = std::get<StarHash>(fn_);
        if (!sh.v_seed)
            throw std::logic_error("StarHash without v-seed is not serializable");
        out << "star,2," << sh.p.value() << ',' << sh.r << ',' << sh.a << ','
            << sh.b << ',' << *sh.v_seed;
    }
    return out.str();
}

namespace {

std::vector<std::uint64_t> split_numbers(const std::string& text, std::size_t from) {
    std::vector<std::uint64_t> out;
    std::size_t pos = from;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok(text.data() + pos,
                             (comma == std::string::npos ? text.size() : comma) - pos);
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw std::invalid_argument("HashFunction::parse: bad number '" +
                                        std::string(tok) + "'");
        out.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

} // namespace

HashFunction HashFunction::parse(const std::string& text) {
    const std::size_t comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("HashFunction::parse: malformed input");
    const Family fam = family_from_name(text.substr(0, comma));
    const auto nums = split_numbers(text, comma + 1);
    if (nums.size() < 3)
        throw std::invalid_argument("HashFunction::parse: too few fields");
    const std::uint64_t k = nums[0];
    PrimeModulus p(nums[1]);
    const auto r = static_cast<std::uint32_t>(nums[2]);
    switch (fam) {
        case Family::Polynomial: {
            if (nums.size() != 3 + k)
                throw std::invalid_argument("HashFunction::parse: coefficient count mismatch");
            std::vector<std::uint32_t> coeffs(nums.begin() + 3, nums.end());
            return HashFunction(PolynomialHash(p, r, std::move(coeffs)));
        }
        case Family::CarterWegman: {
            if (nums.size() != 5)
                throw std::invalid_argument("HashFunction::parse: cw needs a,b");
            return HashFunction(CWHash(p, r, static_cast<std::uint32_t>(nums[3]),
                                       static_cast<std::uint32_t>(nums[4])));
        }
        case Family::Star: {
            if (nums.size() != 6)
                throw std::invalid_argument("HashFunction::parse: star needs a,b,vseed");
            return HashFunction(StarHash::from_seed(
                p, r, static_cast<std::uint32_t>(nums[3]),
                static_cast<std::uint32_t>(nums[4]), nums[5]));
        }
    }
    throw std::logic_error("unreachable");
}

HashFunction sample(Family kind, std::uint32_t k, PrimeModulus p, std::uint32_t r,
                    Rng& rng) {
    const std::uint32_t pp = p.value();
    switch (kind) {
        case Family::Polynomial: {
            if (k < 1 || k > 5)
                throw std::invalid_argument("sample: polynomial k must be in 1..5");
            std::vector<std::uint32_t> coeffs(k);
            for (auto& c : coeffs) c = static_cast<std::uint32_t>(rng.below(pp));
            return HashFunction(PolynomialHash(p, r, std::move(coeffs)));
        }
        case Family::CarterWegman: {
            const auto a = static_cast<std::uint32_t>(1 + rng.below(pp - 1));
            const auto b = static_cast<std::uint32_t>(rng.below(pp));
            return HashFunction(CWHash(p, r, a, b));
        }
        case Family::Star: {
            const auto a = static_cast<std::uint32_t>(rng.below(pp));
            const auto b = static_cast<std::uint32_t>(rng.below(pp));
            const std::uint64_t v_seed = rng.next();
            return HashFunction(StarHash::from_seed(p, r, a, b, v_seed));
        }
    }
    throw std::logic_error("unreachable");
}

} // namespace probelab
