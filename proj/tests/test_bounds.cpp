#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "bounds.hpp"
#include "rng.hpp"

using namespace probelab;
using namespace probelab::bounds;

TEST_CASE("helper T") {
    CHECK(t_alpha_eps(0.5, 0.0) == doctest::Approx(10.288889).epsilon(1e-6));
    CHECK(t_alpha_eps(0.1, 0.0) == doctest::Approx(0.294671).epsilon(1e-6));
    CHECK(t_alpha_eps(0.0, 0.0) == 0.0);
    CHECK(t_alpha_eps(0.0, 0.5) == 0.0);
    CHECK_THROWS_AS(t_alpha_eps(1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(t_alpha_eps(0.9, 0.2), std::domain_error); // (1+eps)a >= 1
    CHECK_THROWS_AS(t_alpha_eps(-0.1, 0.0), std::domain_error);
}

TEST_CASE("interval tail bound") {
    CHECK(lemma1_tail(0.5, 0.0, 16, 8) ==
          doctest::Approx(200.0 / 4096).epsilon(1e-12));
    CHECK(lemma1_tail(0.5, 0.0, 4, 1) == 1.0); // raw value 14, clamped
    CHECK(lemma1_tail(0.5, 0.0, 4, 1, false) == doctest::Approx(14.0));
    CHECK_THROWS_AS(lemma1_tail(0.5, 0.0, 16, 0), std::domain_error);
}

TEST_CASE("fully loaded probability bound") {
    CHECK(lemma1_fully_loaded(0.5, 0.0, 16) ==
          doctest::Approx(0.048828125).epsilon(1e-12));
    // bound decreases in q and explodes as (1+eps)a -> 1
    CHECK(lemma1_fully_loaded(0.5, 0.0, 32) < lemma1_fully_loaded(0.5, 0.0, 16));
    CHECK(lemma1_fully_loaded(0.99, 0.0, 4) == 1.0);
    CHECK(lemma1_fully_loaded(0.99, 0.0, 4, false) > 1.0);
}

TEST_CASE("fourth central moment of an indicator sum") {
    CHECK(fourth_central_moment({1.0}) == doctest::Approx(0.0));
    CHECK(fourth_central_moment({0.5, 0.5, 0.5, 0.5}) == doctest::Approx(2.5));
    CHECK(fourth_central_moment({0.5, 0.5}) == doctest::Approx(0.5));
    // cross-check against direct enumeration for mixed probabilities
    const std::vector<double> probs = {0.1, 0.3, 0.7};
    double mu = 0.0;
    for (double p : probs) mu += p;
    double m4 = 0.0;
    for (int mask = 0; mask < 8; ++mask) {
        double pr = 1.0;
        int ones = 0;
        for (int i = 0; i < 3; ++i)
            if (mask & (1 << i)) {
                pr *= probs[i];
                ++ones;
            } else {
                pr *= 1 - probs[i];
            }
        const double dev = ones - mu;
        m4 += pr * dev * dev * dev * dev;
    }
    CHECK(fourth_central_moment(probs) == doctest::Approx(m4).epsilon(1e-12));
}

TEST_CASE("pairwise tail bound") {
    CHECK(chebyshev_tail(0.5, 0.0, 16, 8) == doctest::Approx(0.125));
    CHECK(chebyshev_tail(0.5, 0.0, 1, 0.5, false) == doctest::Approx(2.0));
    CHECK(chebyshev_tail(0.5, 0.0, 1, 0.5) == 1.0);
}

TEST_CASE("full-independence reference curve") {
    CHECK(full_independence_unsuccessful_bound(0.5) ==
          doctest::Approx(7.157486).epsilon(1e-6));
    CHECK(full_independence_unsuccessful_bound(0.9) <
          theorem4_bounds(0.9, 0.0).unsuccessful);
}

TEST_CASE("expected-cost bounds") {
    const auto b = theorem4_bounds(0.5, 0.0);
    CHECK(b.unsuccessful == doctest::Approx(11.288889).epsilon(1e-6));
    CHECK(b.insertion == doctest::Approx(21.577778).epsilon(1e-6));
    CHECK(b.deletion == doctest::Approx(b.insertion));
    // the two successful-search branches nearly agree at the breakpoint
    const double lo = theorem4_bounds(0.3 - 1e-9, 0.0).successful;
    const double hi = theorem4_bounds(0.3 + 1e-9, 0.0).successful;
    CHECK(std::abs(lo - hi) < 0.01);
}

TEST_CASE("high-load successful-search bound") {
    CHECK(theorem5_bound(0.8, 0.0) == doctest::Approx(27.3));
    CHECK(theorem5_bound(0.9, 0.0) == doctest::Approx(57.3));
    CHECK_THROWS_AS(theorem5_bound(0.7, 0.0), std::domain_error);
}

namespace {
std::uint64_t brute_overlap(CyclicInterval a, CyclicInterval b, std::uint32_t r) {
    std::vector<int> in_a(r, 0), in_b(r, 0);
    for (std::uint32_t i = 0; i < a.length; ++i) in_a[(a.start + i) % r] = 1;
    for (std::uint32_t i = 0; i < b.length; ++i) in_b[(b.start + i) % r] = 1;
    std::uint64_t n = 0;
    for (std::uint32_t i = 0; i < r; ++i) n += in_a[i] & in_b[i];
    return n;
}
} // namespace

TEST_CASE("cyclic overlap vs brute force") {
    CHECK(cyclic_overlap({0, 4}, {0, 4}, 8) == 4);
    CHECK(cyclic_overlap({6, 4}, {0, 4}, 8) == 2);   // wrap on one side
    CHECK(cyclic_overlap({6, 5}, {2, 6}, 8) == 3);   // split intersection
    Rng rng(3);
    for (int iter = 0; iter < 2000; ++iter) {
        const std::uint32_t r = 4 + static_cast<std::uint32_t>(rng.below(29));
        CyclicInterval a{static_cast<std::uint32_t>(rng.below(r)),
                         static_cast<std::uint32_t>(rng.below(r + 1))};
        CyclicInterval b{static_cast<std::uint32_t>(rng.below(r)),
                         static_cast<std::uint32_t>(rng.below(r + 1))};
        CHECK(cyclic_overlap(a, b, r) == brute_overlap(a, b, r));
    }
}

TEST_CASE("intersection lower bound") {
    IntervalSet two(8);
    two.add(0, 4);
    two.add(0, 4);
    CHECK(intersection_lower_bound(two) == doctest::Approx(8.0));

    IntervalSet three(6);
    three.add(0, 4);
    three.add(2, 4);
    three.add(4, 4);
    CHECK(intersection_lower_bound(three) == doctest::Approx(6.0));

    IntervalSet disjoint(8);
    disjoint.add(0, 2);
    disjoint.add(4, 2);
    CHECK(intersection_lower_bound(disjoint) == doctest::Approx(0.0));
}

TEST_CASE("interval sets expand to their covered positions") {
    IntervalSet s(6);
    s.add(4, 4);
    const auto homes = s.covered_homes();
    CHECK(homes == std::vector<std::uint32_t>{4, 5, 0, 1});
    CHECK_THROWS_AS(s.add(0, 7), std::domain_error);
    CHECK_THROWS_AS(s.add(6, 1), std::domain_error);
}
