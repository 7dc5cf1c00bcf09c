#include <cstdint>
#include <numeric>
#include <vector>

#include "doctest.h"

#include "cmdeg/cartan.hpp"
#include "cmdeg/order.hpp"

using namespace cmdeg;

namespace {
using Sizes = std::vector<std::int64_t>;
}

TEST_CASE("unit-group order closed form") {
    CHECK(cartan_order(make_order(-3, 1), 2) == 3);
    CHECK(cartan_order(make_order(-3, 1), 3) == 6);
    CHECK(cartan_order(make_order(-4, 1), 2) == 2);
    CHECK(cartan_order(make_order(-7, 1), 2) == 1);
    CHECK(cartan_order(make_order(-15, 1), 4) == 4);
    CHECK(cartan_order(make_order(-15, 1), 8) == 16);
    CHECK(cartan_order(make_order(-3, 2), 2) == 2);
    CHECK(cartan_order(make_order(-3, 1), 36) == 648);
}

TEST_CASE("unit-group order matches exhaustive unit enumeration") {
    for (std::int64_t d : {-3, -4, -7, -8, -11, -12, -15, -16, -20, -24, -36}) {
        const Order o = order_from_delta(d);
        for (std::int64_t n = 1; n <= 12; ++n)
            CHECK(cartan_order(o, n) ==
                  static_cast<std::int64_t>(enumerate_units(o, n).size()));
    }
}

TEST_CASE("torsion-unit image sizes in the finite ring") {
    CHECK(torsion_unit_image(make_order(-3, 1), 1).size() == 1);
    CHECK(torsion_unit_image(make_order(-3, 1), 2).size() == 3);
    CHECK(torsion_unit_image(make_order(-3, 1), 3).size() == 6);
    CHECK(torsion_unit_image(make_order(-3, 1), 9).size() == 6);
    CHECK(torsion_unit_image(make_order(-4, 1), 2).size() == 2);
    CHECK(torsion_unit_image(make_order(-4, 1), 4).size() == 4);
    CHECK(torsion_unit_image(make_order(-7, 1), 2).size() == 1);
    CHECK(torsion_unit_image(make_order(-7, 1), 3).size() == 2);
    CHECK(torsion_unit_image(order_from_delta(-12), 4).size() == 2);
}

TEST_CASE("orbit report frozen values at small levels") {
    struct Case {
        std::int64_t delta, m, n, pair_count, min_size, min_reduced;
        Sizes sizes, reduced;
    };
    const std::vector<Case> cases{
        {-3, 1, 2, 3, 3, 1, {3}, {1}},
        {-3, 2, 2, 6, 3, 1, {3, 3}, {1, 1}},
        {-3, 1, 3, 8, 2, 1, {2, 6}, {1, 1}},
        {-3, 3, 3, 48, 6, 1, {6, 6, 6, 6, 6, 6, 6, 6}, {1, 1, 1, 1, 1, 1, 1, 1}},
        {-3, 1, 9, 72, 18, 3, {18, 54}, {3, 9}},
        {-4, 1, 2, 3, 1, 1, {1, 2}, {1, 1}},
        {-4, 1, 4, 12, 4, 1, {4, 8}, {1, 2}},
        {-4, 2, 4, 24, 4, 1, {4, 4, 8, 8}, {1, 1, 2, 2}},
        {-7, 1, 2, 3, 1, 1, {1, 1, 1}, {1, 1, 1}},
        {-11, 1, 2, 3, 3, 3, {3}, {3}},
        {-11, 1, 4, 12, 12, 6, {12}, {6}},
        {-12, 1, 4, 12, 2, 1, {2, 2, 8}, {1, 1, 4}},
        {-15, 1, 4, 12, 2, 1, {2, 2, 2, 2, 4}, {1, 1, 1, 1, 2}},
        {-16, 1, 4, 12, 2, 1, {2, 2, 8}, {1, 1, 4}},
        {-27, 1, 9, 72, 6, 3, {6, 6, 6, 54}, {3, 3, 3, 27}},
    };
    for (const Case& c : cases) {
        const Order o = order_from_delta(c.delta);
        const OrbitReport rep = pair_orbits(o, c.m, c.n);
        CHECK(rep.pair_count == c.pair_count);
        CHECK(rep.min_size == c.min_size);
        CHECK(rep.min_reduced_size == c.min_reduced);
        CHECK(rep.orbit_sizes == c.sizes);
        CHECK(rep.reduced_orbit_sizes == c.reduced);
    }
}

TEST_CASE("orbit report bookkeeping invariants") {
    for (std::int64_t d : {-3, -4, -8, -15, -20}) {
        const Order o = order_from_delta(d);
        for (std::int64_t n : {2, 3, 4, 6, 8, 9, 12}) {
            for (std::int64_t m = 1; m <= n; ++m) {
                if (n % m != 0) continue;
                const OrbitReport rep = pair_orbits(o, m, n);
                CHECK(std::accumulate(rep.orbit_sizes.begin(),
                                      rep.orbit_sizes.end(),
                                      std::int64_t{0}) == rep.pair_count);
                CHECK(rep.min_size == rep.orbit_sizes.front());
                CHECK(rep.min_reduced_size == rep.reduced_orbit_sizes.front());
                const MinOrbit mo = min_orbit(o, m, n);
                CHECK(mo.t_tilde == rep.min_size);
                CHECK(mo.t == rep.min_reduced_size);
            }
        }
    }
}

TEST_CASE("level 1 yields the single empty pair") {
    const OrbitReport rep = pair_orbits(make_order(-3, 1), 1, 1);
    CHECK(rep.pair_count == 1);
    CHECK(rep.orbit_sizes == Sizes{1});
    CHECK(rep.reduced_orbit_sizes == Sizes{1});
}

TEST_CASE("enumeration rejects out-of-range levels") {
    const Order o = make_order(-3, 1);
    CHECK_THROWS_AS(pair_orbits(o, 1, 65), cap_exceeded);
    CHECK_THROWS_AS(pair_orbits(o, 1, 0), invalid_input);
    CHECK_THROWS_AS(pair_orbits(o, 3, 4), invalid_input);  // M must divide N
    CHECK_THROWS_AS(enumerate_units(o, 100), cap_exceeded);
}
