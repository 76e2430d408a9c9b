#ifndef RIESZ_GEOMETRY_HPP
#define RIESZ_GEOMETRY_HPP

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "riesz/rational.hpp"

namespace riesz {

/// Axis-aligned half-open box  ∏ [lo_i, hi_i).  Invariant: lo_i < hi_i.
struct HalfOpenBox {
    RatVec lo, hi;

    int dim() const { return static_cast<int>(lo.size()); }
    Rational measure() const;
    bool contains(const RatVec& p) const;
    bool operator==(const HalfOpenBox&) const = default;
};

/// Finite union of pairwise-disjoint half-open boxes.  Construct through
/// normalize_box_union so disjointness is actually checked.
struct BoxUnion {
    std::vector<HalfOpenBox> boxes;

    int dim() const { return boxes.empty() ? 0 : boxes.front().dim(); }
    Rational measure() const;
    bool contains(const RatVec& p) const;
};

using RatPt2 = std::array<Rational, 2>;

/// Simple polygon with rational vertices, counterclockwise.
///
/// Boundary membership follows the half-open convention: a boundary
/// point belongs to the polygon iff points displaced by (δ², δ) for
/// arbitrarily small δ > 0 are interior.  Under this rule the polygon
/// (0,0)(1,0)(1,1)(0,1) is exactly the half-open box [0,1)², and the
/// integer translates of any polygon partition boundary points with the
/// same multiplicities as interior ones, so every "almost everywhere"
/// statement holds with an empty exceptional set.
struct Polygon2D {
    std::vector<RatPt2> vertices;

    Rational area() const; // shoelace, positive for CCW
    bool contains(const RatVec& p) const;
};

enum class PointLocation { Inside, Boundary, Outside };
PointLocation classify_point(const Polygon2D& poly, const RatPt2& p);

/// Validates simplicity (exact all-pairs edge test) and orients CCW.
Polygon2D make_polygon(std::vector<RatPt2> vertices);

using Region = std::variant<BoxUnion, Polygon2D>;

int region_dim(const Region& r);
Rational region_measure(const Region& r);
/// Exact membership with half-open boundary semantics; total on ℝ^d.
bool region_contains(const Region& r, const RatVec& p);
/// Componentwise bounding box [lo, hi] (closed hull; exact).
std::pair<RatVec, RatVec> region_bbox(const Region& r);
/// Per-axis integer range [t_min, t_max] that can possibly translate a
/// point of [0,1)^d into the region: the integer hull of bbox − [0,1)^d.
std::pair<IntVec, IntVec> translate_range(const Region& r);

/// Validates pairwise disjointness (exact) and returns the union with
/// boxes in canonical lexicographic order.  Throws OverlapError with an
/// interior witness point if two boxes share positive measure.
BoxUnion normalize_box_union(std::vector<HalfOpenBox> boxes);

/// One piece of the region reduced modulo ℤ^d: shape ⊆ [0,1)^d and
/// shape + translate was a subset of the region.  Box regions reduce to
/// boxes split along integer hyperplanes; polygons to exact clips
/// against unit squares (vertex rings, possibly with collinear
/// degeneracies, but with exact area).
struct ReducedPiece {
    std::variant<HalfOpenBox, std::vector<RatPt2>> shape;
    IntVec translate;

    Rational measure() const;
};

std::vector<ReducedPiece> reduce_mod_unit_lattice(const Region& r);

/// Shoelace area of a vertex ring (sign follows orientation).
Rational ring_area(const std::vector<RatPt2>& ring);

/// Exact clip of a CCW ring against the closed square
/// [sx, sx+1] × [sy, sy+1] (Sutherland–Hodgman, four half-planes).
std::vector<RatPt2> clip_ring_to_unit_square(const std::vector<RatPt2>& ring,
                                             const Rational& sx, const Rational& sy);

} // namespace riesz

#endif
