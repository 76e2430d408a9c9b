#ifndef RIESZ_CELLS_HPP
#define RIESZ_CELLS_HPP

#include <variant>
#include <vector>

#include "riesz/geometry.hpp"
#include "riesz/rational.hpp"

namespace riesz {

/// Trapezoid with vertical left/right sides: x ∈ [x0, x1), bottom and top
/// are the segments interpolating (x0,yb0)-(x1,yb1) and (x0,yt0)-(x1,yt1).
/// Membership is half-open: left and bottom included, right and top not.
/// May degenerate to a triangle (equal y at one end), never to zero area.
struct Trapezoid {
    Rational x0, x1;
    Rational yb0, yb1;
    Rational yt0, yt1;

    Rational bottom_at(const Rational& x) const;
    Rational top_at(const Rational& x) const;
    bool contains(const RatPt2& p) const;
    Rational measure() const;
    /// CCW outline (4 vertices, or 3 when one side degenerates).
    std::vector<RatPt2> outline() const;
};

/// One constant-multiplicity region of the fundamental cell [0,1)^d.
struct Cell {
    std::variant<HalfOpenBox, Trapezoid> shape;
    std::vector<IntVec> translates; // strictly lex-increasing, distinct
    RatVec witness;                 // interior point, never on any boundary
    Rational measure;

    bool contains(const RatVec& p) const;
};

/// Exact partition of [0,1)^d into cells of constant translate profile.
/// Box regions yield a grid (per-axis breakpoints); 2D polygons yield a
/// vertical decomposition of the clipped-edge arrangement.
struct CellComplex {
    int dim = 0;
    std::vector<Cell> cells;

    // box complexes: per-axis sorted breakpoints (first 0, last 1) and
    // cells stored row-major over interval indices
    std::vector<std::vector<Rational>> axis_breaks;

    // polygon complexes: sorted slab boundaries and per-slab cell
    // indices ordered bottom-up
    std::vector<Rational> slab_x;
    std::vector<std::vector<int>> slab_cells;

    bool is_grid() const { return !axis_breaks.empty(); }

    /// Exact point location; total on [0,1)^d.
    int locate(const RatVec& p) const;

    /// LCM of all breakpoint denominators (grid complexes; used by the
    /// sampling grid divisibility precondition).
    mpz_class breakpoint_denominator_lcm() const;
};

/// Decomposes [0,1)^d into cells given the reduced pieces of the region.
/// Translate lists are {t : witness + t ∈ region}, enumerated exactly
/// over the integer hull of bbox(region) − [0,1)^d.  Cells with empty
/// translate lists are kept; zero-area faces are filtered.
CellComplex cell_decompose(const std::vector<ReducedPiece>& pieces, const Region& region);

} // namespace riesz

#endif
