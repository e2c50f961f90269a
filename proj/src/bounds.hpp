#pragma once

#include <cstdint>
#include <vector>

namespace probelab::bounds {

/// Inputs to the analytic bound evaluators.
struct BoundParams {
    double alpha = 0.0; // load factor, in [0,1)
    double eps = 0.0;   // approximate-uniformity slack
    double q = 0.0;     // interval length
    double d = 0.0;     // deviation
    std::uint64_t n = 0;
    std::uint64_t r = 0;
};

/// The helper T(alpha, eps): minimum of the two printed branch expressions.
/// T(0, eps) is defined as 0 by continuity.
double t_alpha_eps(double alpha, double eps);

/// Bound on Pr{ |h(S) cap Q| >= alpha*q*(1+eps) + d } for a 4-wise
/// independent, (eps/r)-approximately uniform family.
/// Raw value (3 a^2 q^2 + a q)(1+eps)^2 / d^4, clamped to [0,1] by default.
double lemma1_tail(double alpha, double eps, double q, double d, bool clamp = true);

/// Bound on the probability that a translated interval of length q is fully
/// loaded (the 5-wise part): (3 a^2 q^-2 + a q^-3)(1+eps)^2 / (1-(1+eps)a)^4.
double lemma1_fully_loaded(double alpha, double eps, double q, bool clamp = true);

/// Exact E((X - mu)^4) for a sum of independent indicators with the given
/// success probabilities: mu + 3mu^2 - 7s2 - 6mu*s2 + 12s3 + 3s2^2 - 6s4
/// where s_k is the sum of k-th powers.
double fourth_central_moment(const std::vector<double>& probs);

/// Second-moment analogue of lemma1_tail for pairwise independence:
/// alpha*q*(1+eps) / d^2, clamped by default.
double chebyshev_tail(double alpha, double eps, double q, double d, bool clamp = true);

/// Unsuccessful-search expectation under full independence:
/// 1 + e^{1-a+ln a} / (ln 2 * |1-a+ln a|).
double full_independence_unsuccessful_bound(double alpha);

struct Theorem4Bounds {
    double unsuccessful; // 1 + T
    double insertion;    // 1 + 2T
    double deletion;     // 1 + 2T
    double successful;   // piecewise, breakpoint at alpha = 0.3/(1+eps)
};

Theorem4Bounds theorem4_bounds(double alpha, double eps);

/// Successful-search bound for 4-wise independence, explicit constants only
/// for alpha >= 0.8: 6(1+eps)/(1-(1+eps)alpha) - 2.7.
double theorem5_bound(double alpha, double eps);

struct CyclicInterval {
    std::uint32_t start;  // in [r]
    std::uint32_t length; // <= r
};

/// Cyclic positions two intervals modulo r have in common (the intersection
/// of two arcs may be two arcs; all overlapped positions count).
std::uint64_t cyclic_overlap(CyclicInterval a, CyclicInterval b, std::uint32_t r);

/// A multiset of cyclic intervals modulo r.
class IntervalSet {
public:
    explicit IntervalSet(std::uint32_t r);
    void add(std::uint32_t start, std::uint32_t length);
    const std::vector<CyclicInterval>& intervals() const { return intervals_; }
    std::uint32_t ring_size() const { return r_; }
    /// Multiset expansion of all covered positions.
    std::vector<std::uint32_t> covered_homes() const;

private:
    std::uint32_t r_;
    std::vector<CyclicInterval> intervals_;
};

/// Lower bound on total linear-probing insertion steps when probe sequences
/// start exactly at the positions covered by the intervals:
/// sum over pairs of |I_j1 cap I_j2|^2 / 2.
double intersection_lower_bound(const IntervalSet& set);

} // namespace probelab::bounds
