#ifndef RIESZ_TEST_SUPPORT_HPP
#define RIESZ_TEST_SUPPORT_HPP

#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "riesz/construction.hpp"
#include "riesz/geometry.hpp"
#include "riesz/tiling.hpp"
#include "riesz/transform.hpp"

namespace riesz::testutil {

// ---- region builders ------------------------------------------------

HalfOpenBox box1(const char* lo, const char* hi);
HalfOpenBox box2(const char* lox, const char* loy, const char* hix, const char* hiy);
BoxUnion intervals(std::vector<std::pair<const char*, const char*>> ivals);
Polygon2D polygon(std::vector<std::pair<const char*, const char*>> verts);

/// The centrally symmetric integer hexagon (0,0)(2,0)(3,1)(3,2)(1,2)(0,1),
/// area 5.
Polygon2D hexagon5();

/// reduce + cell_decompose in one step.
CellComplex complex_of(const Region& region);

// ---- independent oracles --------------------------------------------

/// Brute-force translate list of a point: {t in the integer hull of
/// bbox(region) − [0,1)^d : x + t ∈ region}, sorted lex.
std::vector<IntVec> oracle_translates(const Region& region, const RatVec& x);

/// det N via the explicit permutation sum over S_k (sign tracked by
/// inversion count), independent of any LU/SVD path.
std::complex<double> oracle_perm_det(const TranslateProfile& p,
                                     const std::vector<std::vector<double>>& a);

/// Dense assembled analysis operator  f ↦ coefficients  of the discrete
/// model, scaled so its squared singular values are directly comparable
/// with the coefficient-normalization frame bounds.
Eigen::MatrixXcd oracle_analysis_matrix(const SampleGrid& grid, const ShiftVectors& a,
                                        const std::vector<ProfileMatrix>& mats);

/// Uniform random rational in [0,1) with denominator `den`.
Rational random_rational(SeededRng& rng, long den = 9973);
RatVec random_point(SeededRng& rng, int dim, long den = 9973);

// ---- instance generator ----------------------------------------------

struct GeneratedTile {
    BoxUnion region;
    long k = 0;
};

/// Random level-k box-union multiple tile of ℤ^d: a random breakpoint
/// grid of [0,1)^d with k distinct integer translates per grid cell.
GeneratedTile random_box_tile(SeededRng& rng, int d, long k);

} // namespace riesz::testutil

#endif
