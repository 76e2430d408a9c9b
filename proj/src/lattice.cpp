#include "riesz/lattice.hpp"

#include <algorithm>

#include "riesz/errors.hpp"

namespace riesz {

Rational Lattice::covolume() const { return det(basis).abs(); }

Lattice make_lattice(RatMat basis) {
    if (basis.rows != basis.cols || basis.rows == 0)
        throw ParseError("lattice basis must be square and nonempty");
    if (det(basis) == 0) throw ParseError("lattice basis is singular");
    return Lattice{std::move(basis)};
}

Lattice dual_lattice(const Lattice& l) {
    return Lattice{transpose(inverse(l.basis))};
}

namespace {

HalfOpenBox transform_box(const RatMat& m, const HalfOpenBox& box) {
    // monomial m: image of a box is a box; re-canonicalize to [min, max)
    int d = box.dim();
    RatVec lo = mat_vec(m, box.lo);
    RatVec hi = mat_vec(m, box.hi);
    HalfOpenBox out;
    out.lo.resize(d);
    out.hi.resize(d);
    for (int i = 0; i < d; ++i) {
        out.lo[i] = std::min(lo[i], hi[i]);
        out.hi[i] = std::max(lo[i], hi[i]);
    }
    return out;
}

} // namespace

NormalizedInstance normalize_instance(const Region& region, const Lattice& l) {
    int d = l.dim();
    if (region_dim(region) != d)
        throw ParseError("region and lattice dimensions differ");
    NormalizationMap map{inverse(l.basis), l.basis, transpose(inverse(l.basis))};

    if (std::holds_alternative<BoxUnion>(region)) {
        if (!is_monomial(map.forward))
            throw NonAxisAlignedError(
                "box-union region does not stay axis-aligned under this lattice; "
                "supply a polygon (d=2) or pre-normalized input");
        const auto& u = std::get<BoxUnion>(region);
        std::vector<HalfOpenBox> boxes;
        boxes.reserve(u.boxes.size());
        for (const auto& b : u.boxes) boxes.push_back(transform_box(map.forward, b));
        return NormalizedInstance{normalize_box_union(std::move(boxes)), std::move(map)};
    }

    const auto& poly = std::get<Polygon2D>(region);
    std::vector<RatPt2> verts;
    verts.reserve(poly.vertices.size());
    for (const auto& v : poly.vertices) {
        RatVec w = mat_vec(map.forward, RatVec{v[0], v[1]});
        verts.push_back(RatPt2{w[0], w[1]});
    }
    return NormalizedInstance{make_polygon(std::move(verts)), std::move(map)};
}

DensityVerdict density_check(const Rational& measure, const Lattice& l, long k) {
    DensityVerdict v;
    v.region_measure = measure;
    v.covolume = l.covolume();
    v.ratio = measure / v.covolume;
    v.ratio_integral = v.ratio.is_integer();
    v.level_checked = k;
    v.pass = (measure == Rational(k) * v.covolume);
    return v;
}

} // namespace riesz
