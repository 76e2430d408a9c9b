#include <doctest.h>

#include "riesz/errors.hpp"
#include "riesz/lattice.hpp"
#include "test_support.hpp"

using namespace riesz;
using namespace riesz::testutil;

namespace {

RatMat mat2(const char* a, const char* b, const char* c, const char* d) {
    RatMat m(2, 2);
    m.at(0, 0) = Rational::parse(a);
    m.at(0, 1) = Rational::parse(b);
    m.at(1, 0) = Rational::parse(c);
    m.at(1, 1) = Rational::parse(d);
    return m;
}

} // namespace

TEST_CASE("dual lattice examples") {
    CHECK(dual_lattice(make_lattice(RatMat::identity(3))).basis == RatMat::identity(3));

    Lattice diag = make_lattice(mat2("2", "0", "0", "1"));
    CHECK(dual_lattice(diag).basis == mat2("1/2", "0", "0", "1"));

    // A=[[1,1],[0,1]] -> dual basis [[1,0],[-1,1]]
    Lattice shear = make_lattice(mat2("1", "1", "0", "1"));
    CHECK(dual_lattice(shear).basis == mat2("1", "0", "-1", "1"));
}

TEST_CASE("dual pairing is integral on generators") {
    for (const auto& m : {mat2("1", "1", "0", "1"), mat2("2", "1", "1", "3"),
                          mat2("1/2", "0", "1/3", "5")}) {
        Lattice l = make_lattice(m);
        Lattice d = dual_lattice(l);
        // <col_i(A), col_j(A*)> = (Aᵀ A*)_{ij} must be integral
        RatMat pair = mat_mul(transpose(l.basis), d.basis);
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 2; ++c) CHECK(pair.at(r, c).is_integer());
        CHECK(dual_lattice(d).basis == l.basis);
    }
}

TEST_CASE("normalize_instance scales boxes to the unit lattice") {
    Lattice diag = make_lattice(mat2("2", "0", "0", "1"));
    Region omega{normalize_box_union({box2("0", "0", "2", "1")})};
    auto ni = normalize_instance(omega, diag);
    CHECK(region_measure(ni.region) == Rational(1));
    const auto& u = std::get<BoxUnion>(ni.region);
    REQUIRE(u.boxes.size() == 1);
    CHECK(u.boxes[0].lo == RatVec{0, 0});
    CHECK(u.boxes[0].hi == RatVec{1, 1});
    CHECK(ni.map.dual_forward == mat2("1/2", "0", "0", "1"));
}

TEST_CASE("identity lattice normalizes to the identity map") {
    Region omega{intervals({{"0", "2"}})};
    RatMat one(1, 1);
    one.at(0, 0) = 1;
    auto ni = normalize_instance(omega, make_lattice(one));
    CHECK(ni.map.forward == RatMat::identity(1));
    CHECK(region_measure(ni.region) == Rational(2));
}

TEST_CASE("shear rejects boxes but transforms polygons") {
    Lattice shear = make_lattice(mat2("1", "1", "0", "1"));
    Region boxes{normalize_box_union({box2("0", "0", "1", "1")})};
    CHECK_THROWS_AS(normalize_instance(boxes, shear), NonAxisAlignedError);

    Region tri{polygon({{"0", "0"}, {"2", "0"}, {"0", "2"}})};
    auto ni = normalize_instance(tri, shear);
    // |det A| = 1: area preserved exactly
    CHECK(region_measure(ni.region) == Rational(2));
    const auto& p = std::get<Polygon2D>(ni.region);
    // A^{-1} = [[1,-1],[0,1]]: (0,2) -> (-2,2)
    bool found = false;
    for (const auto& v : p.vertices)
        if (v == RatPt2{Rational(-2), Rational(2)}) found = true;
    CHECK(found);
}

TEST_CASE("negative monomial maps re-canonicalize half-open boxes") {
    Lattice flip = make_lattice(mat2("-1", "0", "0", "1"));
    Region omega{normalize_box_union({box2("0", "0", "1", "1")})};
    auto ni = normalize_instance(omega, flip);
    const auto& u = std::get<BoxUnion>(ni.region);
    REQUIRE(u.boxes.size() == 1);
    CHECK(u.boxes[0].lo == RatVec{-1, 0});
    CHECK(u.boxes[0].hi == RatVec{0, 1});
    CHECK(region_measure(ni.region) == Rational(1));
}

TEST_CASE("normalize then denormalize is the identity") {
    Lattice l = make_lattice(mat2("2", "0", "0", "1/3"));
    RatMat round = mat_mul(l.basis, inverse(l.basis));
    CHECK(round == RatMat::identity(2));

    Region tri{polygon({{"0", "0"}, {"2", "0"}, {"0", "2"}})};
    auto ni = normalize_instance(tri, l);
    const auto& moved = std::get<Polygon2D>(ni.region);
    const auto& orig = std::get<Polygon2D>(tri);
    REQUIRE(moved.vertices.size() == orig.vertices.size());
    for (std::size_t i = 0; i < moved.vertices.size(); ++i) {
        RatVec back = mat_vec(ni.map.inverse,
                              RatVec{moved.vertices[i][0], moved.vertices[i][1]});
        CHECK(RatPt2{back[0], back[1]} == orig.vertices[i]);
    }
}

TEST_CASE("density identity verdicts") {
    CHECK(density_check(Rational(2), make_lattice(RatMat::identity(2)), 2).pass);
    CHECK(density_check(Rational(1), make_lattice(RatMat::identity(3)), 1).pass);

    RatMat one(1, 1);
    one.at(0, 0) = 1;
    for (long k = 1; k <= 4; ++k) {
        auto v = density_check(Rational(3, 2), make_lattice(one), k);
        CHECK(!v.pass);
        CHECK(v.ratio == Rational(3, 2));
        CHECK(!v.ratio_integral);
    }
}

TEST_CASE("singular basis is rejected") {
    CHECK_THROWS_AS(make_lattice(mat2("1", "2", "2", "4")), ParseError);
}
