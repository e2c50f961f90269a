#include "verify.hpp"

#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "adversary.hpp"
#include "bounds.hpp"
#include "field_hash.hpp"
#include "harness.hpp"
#include "linear_probe.hpp"
#include "rng.hpp"

namespace probelab {

namespace {

// Exact fourth central moment of X = #{x in [p] : h(x) < q} over every
// degree-3 polynomial h, compared against the closed form, which only sees
// 4-wise independence and therefore must agree.
SuiteResult suite_moments() {
    SuiteResult res{"moments", true, ""};
    double worst = 0.0;
    for (std::uint32_t p : {5u, 7u}) {
        const std::uint64_t members = static_cast<std::uint64_t>(p) * p * p * p;
        // hist[q-1][v] = number of members with X = v
        std::vector<std::vector<std::uint64_t>> hist(
            p, std::vector<std::uint64_t>(p + 1, 0));
        std::vector<std::uint32_t> values(p);
        for (std::uint64_t member = 0; member < members; ++member) {
            std::uint64_t m = member;
            const std::uint32_t c0 = static_cast<std::uint32_t>(m % p); m /= p;
            const std::uint32_t c1 = static_cast<std::uint32_t>(m % p); m /= p;
            const std::uint32_t c2 = static_cast<std::uint32_t>(m % p); m /= p;
            const std::uint32_t c3 = static_cast<std::uint32_t>(m % p);
            for (std::uint32_t x = 0; x < p; ++x)
                values[x] = static_cast<std::uint32_t>(
                    ((((static_cast<std::uint64_t>(c3) * x + c2) % p) * x + c1) % p * x +
                     c0) % p);
            for (std::uint32_t q = 1; q <= p; ++q) {
                std::uint32_t count = 0;
                for (std::uint32_t x = 0; x < p; ++x)
                    if (values[x] < q) ++count;
                ++hist[q - 1][count];
            }
        }
        for (std::uint32_t q = 1; q <= p; ++q) {
            __int128 first = 0; // sum of N*X over members (N factored in below)
            for (std::uint32_t v = 0; v <= p; ++v)
                first += static_cast<__int128>(hist[q - 1][v]) * v;
            __int128 numerator = 0;
            for (std::uint32_t v = 0; v <= p; ++v) {
                const __int128 centered =
                    static_cast<__int128>(members) * v - first;
                numerator += static_cast<__int128>(hist[q - 1][v]) * centered *
                             centered * centered * centered;
            }
            const double n5 = std::pow(static_cast<double>(members), 5.0);
            const double exact = static_cast<double>(numerator) / n5;
            const std::vector<double> probs(p, static_cast<double>(q) / p);
            const double closed = bounds::fourth_central_moment(probs);
            const double diff = std::abs(exact - closed);
            worst = std::max(worst, diff);
            if (diff > 1e-9) {
                std::ostringstream msg;
                msg << "p=" << p << " q=" << q << ": enumeration " << exact
                    << " vs closed form " << closed;
                return {"moments", false, msg.str()};
            }
        }
    }
    std::ostringstream msg;
    msg << "all (p, q) agree; worst deviation " << worst;
    res.detail = msg.str();
    return res;
}

// Random interval covers: keys homed at the covered positions must cost at
// least the pairwise-intersection lower bound when inserted linearly.
SuiteResult suite_lemma2() {
    Rng rng(0xb10cced);
    for (int instance = 0; instance < 1000; ++instance) {
        const auto r = static_cast<std::uint32_t>(16 + rng.below(241));
        bounds::IntervalSet set(r);
        const int segments = static_cast<int>(2 + rng.below(7));
        std::uint32_t budget = r - 1; // leave one slot free
        for (int s = 0; s < segments && budget > 0; ++s) {
            const auto len = static_cast<std::uint32_t>(
                1 + rng.below(std::min<std::uint64_t>(budget, r / 2)));
            set.add(static_cast<std::uint32_t>(rng.below(r)), len);
            budget -= len;
        }
        LinearTable table(r);
        std::uint64_t key = 0;
        for (std::uint32_t home : set.covered_homes()) table.insert(key++, home);
        const double lower = bounds::intersection_lower_bound(set);
        if (static_cast<double>(table.total_cost()) < lower) {
            std::ostringstream msg;
            msg << "instance " << instance << ": total steps " << table.total_cost()
                << " below lower bound " << lower;
            return {"lemma2", false, msg.str()};
        }
    }
    return {"lemma2", true, "1000 instances, zero violations"};
}

// Every member of the patched family at p=5, r=3: each (x1 != x2, y1, y2)
// must be hit by exactly a 1/9 fraction.
SuiteResult suite_pairwise() {
    const PrimeModulus p(5);
    const std::uint32_t pp = 5, r = 3, p_hat = 6;
    std::uint64_t members = 0;
    // counts[x1][x2][y1][y2]
    std::uint64_t counts[5][5][3][3] = {};
    std::vector<std::uint32_t> v(pp);
    std::uint32_t values[5];
    for (std::uint32_t a = 0; a < pp; ++a) {
        for (std::uint32_t b = 0; b < pp; ++b) {
            const std::uint64_t v_total = 6ULL * 6 * 6 * 6 * 6;
            for (std::uint64_t code = 0; code < v_total; ++code) {
                std::uint64_t c = code;
                for (std::uint32_t x = 0; x < pp; ++x) {
                    v[x] = static_cast<std::uint32_t>(c % p_hat);
                    c /= p_hat;
                }
                const StarHash h(p, r, a, b, v);
                for (std::uint32_t x = 0; x < pp; ++x) values[x] = h.eval(x);
                ++members;
                for (std::uint32_t x1 = 0; x1 < pp; ++x1)
                    for (std::uint32_t x2 = 0; x2 < pp; ++x2)
                        if (x1 != x2) ++counts[x1][x2][values[x1]][values[x2]];
            }
        }
    }
    const std::uint64_t expected = members / 9;
    for (std::uint32_t x1 = 0; x1 < pp; ++x1)
        for (std::uint32_t x2 = 0; x2 < pp; ++x2)
            for (std::uint32_t y1 = 0; y1 < r && x1 != x2; ++y1)
                for (std::uint32_t y2 = 0; y2 < r; ++y2)
                    if (counts[x1][x2][y1][y2] != expected) {
                        std::ostringstream msg;
                        msg << "Pr{h(" << x1 << ")=" << y1 << ", h(" << x2
                            << ")=" << y2 << "} = " << counts[x1][x2][y1][y2]
                            << "/" << members << ", expected " << expected;
                        return {"pairwise", false, msg.str()};
                    }
    std::ostringstream msg;
    msg << members << " members enumerated; every pair probability exactly 1/9";
    return {"pairwise", true, msg.str()};
}

SuiteResult suite_differential() {
    for (Scheme scheme : {Scheme::Linear, Scheme::BlockedBidirectional,
                          Scheme::BlockedXor}) {
        const auto report = differential_test(scheme, 100000, 0xd1ffe7);
        if (!report.empty())
            return {"differential",
                    false,
                    std::string(scheme_name(scheme)) + ": " + report.front()};
    }
    return {"differential", true, "3 schemes x 100000 ops, zero mismatches"};
}

} // namespace

std::vector<std::string> suite_names() {
    return {"moments", "lemma2", "pairwise", "differential"};
}

SuiteResult run_suite(const std::string& name) {
    if (name == "moments") return suite_moments();
    if (name == "lemma2") return suite_lemma2();
    if (name == "pairwise") return suite_pairwise();
    if (name == "differential") return suite_differential();
    throw std::invalid_argument("unknown verify suite: " + name);
}

} // namespace probelab
