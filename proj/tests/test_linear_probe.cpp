#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "bounds.hpp"
#include "errors.hpp"
#include "linear_probe.hpp"
#include "rng.hpp"

using namespace probelab;

TEST_CASE("three keys homed at slot 0, r=4") {
    LinearTable t(4);
    CHECK(t.insert(1, 0) == 1);
    CHECK(t.insert(2, 0) == 2);
    CHECK(t.insert(3, 0) == 3);
    CHECK(t.displacement(0) == 0);
    CHECK(t.displacement(1) == 1);
    CHECK(t.displacement(2) == 2);
    CHECK(t.total_cost() == 6);
    CHECK(t.probes_total() == 6);
}

TEST_CASE("unsuccessful search walks to the first empty slot") {
    LinearTable t(4);
    t.insert(10, 0);
    t.insert(11, 0);
    auto [found, probes] = t.search(99, 1);
    CHECK_FALSE(found);
    CHECK(probes == 2); // slot 1 (occupied, wrong key), slot 2 (empty)
    auto [f2, p2] = t.search(11, 0);
    CHECK(f2);
    CHECK(p2 == 2);
}

TEST_CASE("errors: full table, duplicates, range") {
    LinearTable t(3); // one slot always stays free
    t.insert(1, 0);
    CHECK_THROWS_AS(t.insert(1, 0), duplicate_key_error);
    t.insert(2, 1);
    CHECK_THROWS_AS(t.insert(3, 0), capacity_error);
    CHECK_THROWS_AS(t.insert(4, 3), std::domain_error);
    CHECK_THROWS_AS(LinearTable(0), std::domain_error);
}

TEST_CASE("total cost is insertion-order invariant") {
    const std::vector<std::uint32_t> base = {0, 0, 1, 5, 5, 5, 6};
    const std::uint32_t r = 8;
    std::vector<int> order(base.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::uint64_t> costs;
    do {
        LinearTable t(r);
        std::uint64_t total = 0;
        for (int i : order) total += t.insert(100 + i, base[i]);
        costs.push_back(total);
        CHECK(t.total_cost() == total);
        CHECK(t.check_no_gaps());
    } while (std::next_permutation(order.begin(), order.end()));
    for (auto c : costs) CHECK(c == costs.front());
}

TEST_CASE("homes {0,0,1} cost 5 in any order") {
    const std::vector<std::vector<std::uint32_t>> orders = {
        {0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
    for (const auto& homes : orders) {
        LinearTable t(4);
        std::uint64_t total = 0;
        for (std::size_t i = 0; i < homes.size(); ++i)
            total += t.insert(i + 1, homes[i]);
        CHECK(total == 5);
    }
}

TEST_CASE("cost equals successful-search probes summed over stored keys") {
    Rng rng(42);
    for (int iter = 0; iter < 50; ++iter) {
        const std::uint32_t r = 16 + static_cast<std::uint32_t>(rng.below(49));
        const auto n = static_cast<std::uint32_t>(rng.below(r));
        LinearTable t(r);
        std::uint64_t inserted_cost = 0;
        for (std::uint32_t i = 0; i < n; ++i)
            inserted_cost += t.insert(i, static_cast<std::uint32_t>(rng.below(r)));
        std::uint64_t search_cost = 0;
        for (std::uint32_t i = 0; i < n; ++i) {
            const auto& s = [&] {
                for (std::uint32_t z = 0; z < r; ++z)
                    if (t.slot(z).occupied && t.slot(z).key == i) return t.slot(z);
                FAIL("key vanished");
                return t.slot(0);
            }();
            auto [found, probes] = t.search(i, s.home);
            CHECK(found);
            search_cost += probes;
        }
        CHECK(t.total_cost() == inserted_cost);
        CHECK(search_cost == inserted_cost);
        CHECK(t.check_no_gaps());
    }
}

TEST_CASE("fully_loaded counts homes in a cyclic window") {
    std::vector<std::uint32_t> homes = {7, 0, 1};
    CHECK(fully_loaded(homes, 7, 3, 8));       // window {7,0,1}
    CHECK_FALSE(fully_loaded(homes, 0, 3, 8)); // window {0,1,2} has 2 homes
    CHECK(fully_loaded(homes, 0, 2, 8));
    CHECK(fully_loaded({}, 0, 0, 8));
}

TEST_CASE("occupied runs are fully loaded windows") {
    // keys never cross an empty slot, so the maximal occupied run ending at
    // any slot holds exactly as many homes as slots; a displacement of d
    // therefore certifies a fully loaded window of length >= d+1
    Rng rng(7);
    for (int iter = 0; iter < 30; ++iter) {
        const std::uint32_t r = 32;
        LinearTable t(r);
        std::vector<std::uint32_t> homes;
        for (std::uint32_t i = 0; i < 28; ++i) {
            const auto h = static_cast<std::uint32_t>(rng.below(r));
            t.insert(i, h);
            homes.push_back(h);
        }
        for (std::uint32_t z = 0; z < r; ++z) {
            if (!t.slot(z).occupied) continue;
            const std::uint32_t d = t.displacement(z);
            if (d == 0) continue;
            std::uint32_t s = z;
            while (t.slot((s + r - 1) % r).occupied) s = (s + r - 1) % r;
            const std::uint32_t len = (z + r - s) % r + 1;
            CHECK(len >= d + 1);
            CHECK(fully_loaded(homes, s, len, r));
        }
    }
}
