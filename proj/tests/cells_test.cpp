#include <doctest.h>

#include "riesz/cells.hpp"
#include "riesz/errors.hpp"
#include "test_support.hpp"

using namespace riesz;
using namespace riesz::testutil;

TEST_CASE("cell decomposition of simple intervals") {
    // Ω=[0,2): one cell [0,1) with translates (0),(1)
    CellComplex cx = complex_of(Region{intervals({{"0", "2"}})});
    REQUIRE(cx.cells.size() == 1);
    CHECK(cx.cells[0].measure == Rational(1));
    CHECK(cx.cells[0].translates == std::vector<IntVec>{{0}, {1}});

    // Ω=[0,1)∪[2,3): one cell with translates (0),(2)
    CellComplex gap = complex_of(Region{intervals({{"0", "1"}, {"2", "3"}})});
    REQUIRE(gap.cells.size() == 1);
    CHECK(gap.cells[0].translates == std::vector<IntVec>{{0}, {2}});
}

TEST_CASE("cell decomposition of the non-tile [0,3/2)") {
    CellComplex cx = complex_of(Region{intervals({{"0", "3/2"}})});
    REQUIRE(cx.cells.size() == 2);
    const auto& first = std::get<HalfOpenBox>(cx.cells[0].shape);
    CHECK(first.lo[0] == Rational(0));
    CHECK(first.hi[0] == Rational(1, 2));
    CHECK(cx.cells[0].translates == std::vector<IntVec>{{0}, {1}});
    CHECK(cx.cells[1].translates == std::vector<IntVec>{{0}});
}

TEST_CASE("cells partition the unit cell exactly") {
    SeededRng rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        int d = 1 + static_cast<int>(rng.next_u64() % 2);
        long k = 1 + static_cast<long>(rng.next_u64() % 4);
        auto tile = random_box_tile(rng, d, k);
        CellComplex cx = complex_of(Region{tile.region});
        Rational total;
        for (const auto& c : cx.cells) total += c.measure;
        CHECK(total == Rational(1));
    }
}

TEST_CASE("empty translate lists are retained") {
    // Ω=[1/4,3/4): the complement cells witness multiplicity 0
    CellComplex cx = complex_of(Region{intervals({{"1/4", "3/4"}})});
    REQUIRE(cx.cells.size() == 3);
    CHECK(cx.cells[0].translates.empty());
    CHECK(cx.cells[1].translates == std::vector<IntVec>{{0}});
    CHECK(cx.cells[2].translates.empty());
}

TEST_CASE("triangle arrangement: two faces with multiplicities 3 and 1") {
    Polygon2D tri = polygon({{"0", "0"}, {"2", "0"}, {"0", "2"}});
    CellComplex cx = complex_of(Region{tri});
    REQUIRE(cx.cells.size() == 2);
    CHECK(cx.cells[0].measure == Rational(1, 2));
    CHECK(cx.cells[1].measure == Rational(1, 2));
    CHECK(cx.cells[0].translates ==
          std::vector<IntVec>{{0, 0}, {0, 1}, {1, 0}});
    CHECK(cx.cells[1].translates == std::vector<IntVec>{{0, 0}});
}

TEST_CASE("hexagon decomposes into constant multiplicity 5") {
    CellComplex cx = complex_of(Region{hexagon5()});
    CHECK(!cx.cells.empty());
    Rational total;
    for (const auto& c : cx.cells) {
        total += c.measure;
        CHECK(c.translates.size() == 5);
    }
    CHECK(total == Rational(1));
}

TEST_CASE("translate lists are constant per cell (random-point oracle)") {
    std::vector<Region> regions{
        Region{intervals({{"0", "2"}})},
        Region{intervals({{"0", "3/2"}})},
        Region{normalize_box_union({box2("0", "0", "2", "1")})},
        Region{polygon({{"0", "0"}, {"2", "0"}, {"0", "2"}})},
        Region{hexagon5()},
    };
    SeededRng rng(101);
    for (const auto& region : regions) {
        CellComplex cx = complex_of(region);
        int d = region_dim(region);
        for (int i = 0; i < 1000; ++i) {
            RatVec x = random_point(rng, d);
            int ci = cx.locate(x);
            CHECK(cx.cells[static_cast<std::size_t>(ci)].contains(x));
            CHECK(oracle_translates(region, x) ==
                  cx.cells[static_cast<std::size_t>(ci)].translates);
        }
    }
}

TEST_CASE("locate is total and consistent on boundary-heavy points") {
    CellComplex cx = complex_of(Region{hexagon5()});
    SeededRng rng(5);
    for (int i = 0; i < 400; ++i) {
        // denominator 8 hits slab boundaries and segment endpoints often
        RatVec x = random_point(rng, 2, 8);
        int ci = cx.locate(x);
        CHECK(cx.cells[static_cast<std::size_t>(ci)].contains(x));
        for (int cj = 0; cj < static_cast<int>(cx.cells.size()); ++cj)
            if (cj != ci) CHECK(!cx.cells[static_cast<std::size_t>(cj)].contains(x));
    }
}

TEST_CASE("breakpoint denominator LCM") {
    CellComplex cx = complex_of(Region{intervals({{"0", "2/3"}, {"5/3", "3"}})});
    CHECK(cx.breakpoint_denominator_lcm() == 3);
    CellComplex unit = complex_of(Region{intervals({{"0", "1"}})});
    CHECK(unit.breakpoint_denominator_lcm() == 1);
}
