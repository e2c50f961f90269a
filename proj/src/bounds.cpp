#include "bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace probelab::bounds {

namespace {

void check_alpha_eps(double alpha, double eps) {
    if (!(alpha >= 0.0) || alpha >= 1.0)
        throw std::domain_error("bounds: alpha must be in [0,1)");
    if (!(eps >= 0.0)) throw std::domain_error("bounds: eps must be >= 0");
}

double clamp01(double x, bool clamp) {
    if (!clamp) return x;
    return std::min(1.0, std::max(0.0, x));
}

} // namespace

double t_alpha_eps(double alpha, double eps) {
    check_alpha_eps(alpha, eps);
    if (alpha == 0.0) return 0.0;
    if (eps >= (1.0 - alpha) / alpha)
        throw std::domain_error("t_alpha_eps: eps must be below (1-alpha)/alpha");
    const double ae = (1.0 + eps) * alpha;
    const double den = 1.0 - ae;
    const double e2 = (1.0 + eps) * (1.0 + eps);
    const double branch1 = 5.2 * alpha * e2 / (den * den) + 4.0 / (9.0 * alpha) - 1.0;
    const double branch2 =
        3.0 * alpha * alpha * e2 / (den * den * den * den) * (2.0 + 4.0 / (9.0 * alpha));
    return std::min(branch1, branch2);
}

double lemma1_tail(double alpha, double eps, double q, double d, bool clamp) {
    check_alpha_eps(alpha, eps);
    if (!(q > 0.0)) throw std::domain_error("lemma1_tail: q must be positive");
    if (!(d > 0.0)) throw std::domain_error("lemma1_tail: d must be positive");
    const double e2 = (1.0 + eps) * (1.0 + eps);
    const double raw = (3.0 * alpha * alpha * q * q + alpha * q) * e2 / (d * d * d * d);
    return clamp01(raw, clamp);
}

double lemma1_fully_loaded(double alpha, double eps, double q, bool clamp) {
    check_alpha_eps(alpha, eps);
    if (!(q > 0.0)) throw std::domain_error("lemma1_fully_loaded: q must be positive");
    if (alpha > 0.0 && eps >= (1.0 - alpha) / alpha)
        throw std::domain_error("lemma1_fully_loaded: eps must be below (1-alpha)/alpha");
    const double e2 = (1.0 + eps) * (1.0 + eps);
    const double den = 1.0 - (1.0 + eps) * alpha;
    const double raw = (3.0 * alpha * alpha / (q * q) + alpha / (q * q * q)) * e2 /
                       (den * den * den * den);
    return clamp01(raw, clamp);
}

double fourth_central_moment(const std::vector<double>& probs) {
    if (probs.empty())
        throw std::domain_error("fourth_central_moment: need at least one probability");
    double mu = 0, s2 = 0, s3 = 0, s4 = 0;
    for (double p : probs) {
        if (!(p >= 0.0 && p <= 1.0))
            throw std::domain_error("fourth_central_moment: probability out of [0,1]");
        mu += p;
        s2 += p * p;
        s3 += p * p * p;
        s4 += p * p * p * p;
    }
    return mu + 3 * mu * mu - 7 * s2 - 6 * mu * s2 + 12 * s3 + 3 * s2 * s2 - 6 * s4;
}

double chebyshev_tail(double alpha, double eps, double q, double d, bool clamp) {
    check_alpha_eps(alpha, eps);
    if (!(q > 0.0)) throw std::domain_error("chebyshev_tail: q must be positive");
    if (!(d > 0.0)) throw std::domain_error("chebyshev_tail: d must be positive");
    const double raw = alpha * q * (1.0 + eps) / (d * d);
    return clamp01(raw, clamp);
}

double full_independence_unsuccessful_bound(double alpha) {
    if (!(alpha > 0.0) || alpha >= 1.0)
        throw std::domain_error("full_independence_unsuccessful_bound: alpha in (0,1)");
    const double t = 1.0 - alpha + std::log(alpha);
    if (std::abs(t) < 1e-12)
        throw std::domain_error("full_independence_unsuccessful_bound: degenerate alpha");
    return 1.0 + std::exp(t) / (std::numbers::ln2 * std::abs(t));
}

Theorem4Bounds theorem4_bounds(double alpha, double eps) {
    const double t = t_alpha_eps(alpha, eps);
    Theorem4Bounds out{};
    out.unsuccessful = 1.0 + t;
    out.insertion = 1.0 + 2.0 * t;
    out.deletion = 1.0 + 2.0 * t;
    const double one_eps = 1.0 + eps;
    const double den = 1.0 - one_eps * alpha;
    if (alpha <= 0.3 / one_eps) {
        out.successful =
            1.0 + (alpha * alpha + alpha / 3.0) * 4.0 * one_eps * one_eps / (den * den * den);
    } else {
        out.successful = 0.915 / (alpha * one_eps) + 10.4 * one_eps / den +
                         0.673 / alpha - 1.0 +
                         std::log(std::pow(den, 10.4) * std::pow(alpha * one_eps, 8.0 / 9.0)) /
                             alpha;
    }
    return out;
}

double theorem5_bound(double alpha, double eps) {
    if (alpha < 0.8)
        throw std::domain_error(
            "theorem5_bound: no explicit constant for alpha < 0.8");
    check_alpha_eps(alpha, eps);
    const double den = 1.0 - (1.0 + eps) * alpha;
    if (!(den > 0.0))
        throw std::domain_error("theorem5_bound: (1+eps)*alpha must be below 1");
    return 6.0 * (1.0 + eps) / den - 2.7;
}

std::uint64_t cyclic_overlap(CyclicInterval a, CyclicInterval b, std::uint32_t r) {
    // decompose each arc into at most two linear segments of [0, r)
    struct Seg { std::uint64_t lo, hi; };
    auto segments = [r](CyclicInterval iv, Seg out[2]) -> int {
        if (iv.length == 0) return 0;
        const std::uint64_t end = static_cast<std::uint64_t>(iv.start) + iv.length;
        if (end <= r) { out[0] = {iv.start, end}; return 1; }
        out[0] = {iv.start, r};
        out[1] = {0, end - r};
        return 2;
    };
    Seg sa[2], sb[2];
    const int na = segments(a, sa), nb = segments(b, sb);
    std::uint64_t total = 0;
    for (int i = 0; i < na; ++i) {
        for (int j = 0; j < nb; ++j) {
            const std::uint64_t lo = std::max(sa[i].lo, sb[j].lo);
            const std::uint64_t hi = std::min(sa[i].hi, sb[j].hi);
            if (hi > lo) total += hi - lo;
        }
    }
    return total;
}

IntervalSet::IntervalSet(std::uint32_t r) : r_(r) {
    if (r == 0) throw std::domain_error("IntervalSet: r must be positive");
}

void IntervalSet::add(std::uint32_t start, std::uint32_t length) {
    if (start >= r_) throw std::domain_error("IntervalSet::add: start out of [r]");
    if (length > r_) throw std::domain_error("IntervalSet::add: length > r");
    intervals_.push_back({start, length});
}

std::vector<std::uint32_t> IntervalSet::covered_homes() const {
    std::vector<std::uint32_t> out;
    for (const auto& iv : intervals_) {
        for (std::uint32_t k = 0; k < iv.length; ++k) {
            std::uint32_t pos = iv.start + k;
            if (pos >= r_) pos -= r_;
            out.push_back(pos);
        }
    }
    return out;
}

double intersection_lower_bound(const IntervalSet& set) {
    const auto& ivs = set.intervals();
    double total = 0.0;
    for (std::size_t j1 = 0; j1 < ivs.size(); ++j1) {
        for (std::size_t j2 = j1 + 1; j2 < ivs.size(); ++j2) {
            const double o =
                static_cast<double>(cyclic_overlap(ivs[j1], ivs[j2], set.ring_size()));
            total += o * o / 2.0;
        }
    }
    return total;
}

} // namespace probelab::bounds
