#include "riesz/geometry.hpp"

#include <algorithm>
#include <sstream>

#include "riesz/errors.hpp"

namespace riesz {

namespace {

std::string fmt_point(const RatVec& p) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i].str();
    os << ")";
    return os.str();
}

Rational cross(const RatPt2& o, const RatPt2& a, const RatPt2& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

Rational cross_dir(const RatPt2& u, const RatPt2& v) {
    return u[0] * v[1] - u[1] * v[0];
}

// Sign of cross(w, (δ², δ)) for infinitesimal δ > 0: the perturbation
// direction is "up with a second-order right lean", never parallel to a
// rational direction.
int perturb_side(const RatPt2& w) {
    int sx = w[0].sign();
    if (sx != 0) return sx;
    return -w[1].sign();
}

bool on_segment(const RatPt2& a, const RatPt2& b, const RatPt2& p) {
    if (cross(a, b, p) != 0) return false;
    RatPt2 d{b[0] - a[0], b[1] - a[1]};
    Rational proj = (p[0] - a[0]) * d[0] + (p[1] - a[1]) * d[1];
    if (proj.sign() < 0) return false;
    Rational len2 = d[0] * d[0] + d[1] * d[1];
    return proj <= len2;
}

} // namespace

Rational HalfOpenBox::measure() const {
    Rational m = 1;
    for (std::size_t i = 0; i < lo.size(); ++i) m *= hi[i] - lo[i];
    return m;
}

bool HalfOpenBox::contains(const RatVec& p) const {
    for (std::size_t i = 0; i < lo.size(); ++i)
        if (p[i] < lo[i] || p[i] >= hi[i]) return false;
    return true;
}

Rational BoxUnion::measure() const {
    Rational m;
    for (const auto& b : boxes) m += b.measure();
    return m;
}

bool BoxUnion::contains(const RatVec& p) const {
    for (const auto& b : boxes)
        if (b.contains(p)) return true;
    return false;
}

Rational ring_area(const std::vector<RatPt2>& ring) {
    Rational s;
    std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = ring[i];
        const auto& b = ring[(i + 1) % n];
        s += a[0] * b[1] - b[0] * a[1];
    }
    return s / 2;
}

Rational Polygon2D::area() const { return ring_area(vertices); }

PointLocation classify_point(const Polygon2D& poly, const RatPt2& p) {
    const auto& vs = poly.vertices;
    std::size_t n = vs.size();
    bool inside = false;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = vs[i];
        const auto& b = vs[(i + 1) % n];
        if (on_segment(a, b, p)) return PointLocation::Boundary;
        // Half-open crossing rule: edge counts iff it straddles the
        // horizontal line through p (strict on one side), with the
        // crossing strictly right of p.
        bool a_above = a[1] > p[1];
        bool b_above = b[1] > p[1];
        if (a_above == b_above) continue;
        // x-coordinate of the crossing minus p.x, exact sign only:
        //   a.x + (b.x-a.x)(p.y-a.y)/(b.y-a.y) > p.x
        Rational dy = b[1] - a[1];
        Rational lhs = (a[0] - p[0]) * dy + (b[0] - a[0]) * (p[1] - a[1]);
        if ((dy.sign() > 0 && lhs.sign() > 0) || (dy.sign() < 0 && lhs.sign() < 0))
            inside = !inside;
    }
    return inside ? PointLocation::Inside : PointLocation::Outside;
}

bool Polygon2D::contains(const RatVec& p) const {
    RatPt2 q{p[0], p[1]};
    auto loc = classify_point(*this, q);
    if (loc == PointLocation::Inside) return true;
    if (loc == PointLocation::Outside) return false;

    // Boundary: resolve with the (δ², δ) perturbation.
    const auto& vs = vertices;
    std::size_t n = vs.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (vs[i] == q) {
            const auto& prev = vs[(i + n - 1) % n];
            const auto& next = vs[(i + 1) % n];
            RatPt2 w1{q[0] - prev[0], q[1] - prev[1]};  // incoming direction
            RatPt2 w2{next[0] - q[0], next[1] - q[1]};  // outgoing direction
            Rational turn = cross_dir(w1, w2);
            if (turn == 0) return perturb_side(w2) > 0; // collinear vertex
            bool s1 = perturb_side(w1) > 0;
            bool s2 = perturb_side(w2) > 0;
            return turn.sign() > 0 ? (s1 && s2) : (s1 || s2);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = vs[i];
        const auto& b = vs[(i + 1) % n];
        if (!on_segment(a, b, q)) continue;
        RatPt2 w{b[0] - a[0], b[1] - a[1]};
        return perturb_side(w) > 0; // interior lies left of CCW edges
    }
    throw InternalError("boundary point matched no edge");
}

namespace {

// Do closed segments [a,b] and [c,d] share any point?  Exact.
bool segments_touch(const RatPt2& a, const RatPt2& b, const RatPt2& c, const RatPt2& d) {
    Rational d1 = cross(a, b, c);
    Rational d2 = cross(a, b, d);
    Rational d3 = cross(c, d, a);
    Rational d4 = cross(c, d, b);
    if (((d1.sign() > 0 && d2.sign() < 0) || (d1.sign() < 0 && d2.sign() > 0)) &&
        ((d3.sign() > 0 && d4.sign() < 0) || (d3.sign() < 0 && d4.sign() > 0)))
        return true;
    if (d1 == 0 && on_segment(a, b, c)) return true;
    if (d2 == 0 && on_segment(a, b, d)) return true;
    if (d3 == 0 && on_segment(c, d, a)) return true;
    if (d4 == 0 && on_segment(c, d, b)) return true;
    return false;
}

} // namespace

Polygon2D make_polygon(std::vector<RatPt2> vertices) {
    std::size_t n = vertices.size();
    if (n < 3) throw ParseError("polygon needs at least 3 vertices");
    for (std::size_t i = 0; i < n; ++i)
        if (vertices[i] == vertices[(i + 1) % n])
            throw ParseError("polygon has repeated consecutive vertices");
    Rational a = ring_area(vertices);
    if (a == 0) throw ParseError("polygon has zero area");
    if (a.sign() < 0) std::reverse(vertices.begin(), vertices.end());

    for (std::size_t i = 0; i < n; ++i) {
        const auto& p1 = vertices[i];
        const auto& p2 = vertices[(i + 1) % n];
        // spike check: adjacent edges must not fold back
        const auto& p3 = vertices[(i + 2) % n];
        RatPt2 w1{p2[0] - p1[0], p2[1] - p1[1]};
        RatPt2 w2{p3[0] - p2[0], p3[1] - p2[1]};
        if (cross_dir(w1, w2) == 0) {
            Rational d = w1[0] * w2[0] + w1[1] * w2[1];
            if (d.sign() < 0) throw ParseError("polygon has a zero-area spike");
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            // adjacent edges share exactly their common vertex; checked above
            if (j == i) continue;
            bool adjacent = (j == (i + 1) % n) || ((j + 1) % n == i);
            if (adjacent) continue;
            const auto& q1 = vertices[j];
            const auto& q2 = vertices[(j + 1) % n];
            if (segments_touch(p1, p2, q1, q2))
                throw ParseError("polygon is not simple (edges " + std::to_string(i) +
                                 " and " + std::to_string(j) + " intersect)");
        }
    }
    return Polygon2D{std::move(vertices)};
}

int region_dim(const Region& r) {
    if (std::holds_alternative<BoxUnion>(r)) return std::get<BoxUnion>(r).dim();
    return 2;
}

Rational region_measure(const Region& r) {
    if (std::holds_alternative<BoxUnion>(r)) return std::get<BoxUnion>(r).measure();
    return std::get<Polygon2D>(r).area();
}

bool region_contains(const Region& r, const RatVec& p) {
    if (std::holds_alternative<BoxUnion>(r)) return std::get<BoxUnion>(r).contains(p);
    return std::get<Polygon2D>(r).contains(p);
}

std::pair<RatVec, RatVec> region_bbox(const Region& r) {
    if (std::holds_alternative<BoxUnion>(r)) {
        const auto& u = std::get<BoxUnion>(r);
        if (u.boxes.empty()) throw ParseError("empty region has no bounding box");
        RatVec lo = u.boxes.front().lo, hi = u.boxes.front().hi;
        for (const auto& b : u.boxes)
            for (int i = 0; i < u.dim(); ++i) {
                lo[i] = std::min(lo[i], b.lo[i]);
                hi[i] = std::max(hi[i], b.hi[i]);
            }
        return {lo, hi};
    }
    const auto& poly = std::get<Polygon2D>(r);
    RatVec lo{poly.vertices[0][0], poly.vertices[0][1]};
    RatVec hi = lo;
    for (const auto& v : poly.vertices)
        for (int i = 0; i < 2; ++i) {
            lo[i] = std::min(lo[i], v[i]);
            hi[i] = std::max(hi[i], v[i]);
        }
    return {lo, hi};
}

std::pair<IntVec, IntVec> translate_range(const Region& r) {
    auto [lo, hi] = region_bbox(r);
    int d = static_cast<int>(lo.size());
    IntVec tmin(d), tmax(d);
    for (int i = 0; i < d; ++i) {
        // x + t ∈ region with x ∈ [0,1) forces t ∈ (lo-1, hi)
        tmin[i] = (lo[i] - 1).floor_int64() + 1;
        tmax[i] = hi[i].is_integer() ? hi[i].floor_int64() - 1 : hi[i].floor_int64();
    }
    return {tmin, tmax};
}

BoxUnion normalize_box_union(std::vector<HalfOpenBox> boxes) {
    if (boxes.empty()) throw ParseError("box union must contain at least one box");
    int d = boxes.front().dim();
    for (const auto& b : boxes) {
        if (b.dim() != d || static_cast<int>(b.hi.size()) != d)
            throw ParseError("box dimensions are inconsistent");
        for (int i = 0; i < d; ++i)
            if (!(b.lo[i] < b.hi[i])) throw ParseError("box has empty extent on axis " + std::to_string(i));
    }
    for (std::size_t i = 0; i < boxes.size(); ++i)
        for (std::size_t j = i + 1; j < boxes.size(); ++j) {
            RatVec w(d);
            bool overlap = true;
            for (int ax = 0; ax < d; ++ax) {
                Rational lo = std::max(boxes[i].lo[ax], boxes[j].lo[ax]);
                Rational hi = std::min(boxes[i].hi[ax], boxes[j].hi[ax]);
                if (!(lo < hi)) { overlap = false; break; }
                w[ax] = (lo + hi) / 2;
            }
            if (overlap)
                throw OverlapError("boxes " + std::to_string(i) + " and " + std::to_string(j) +
                                   " overlap; witness " + fmt_point(w));
        }
    std::sort(boxes.begin(), boxes.end(), [](const HalfOpenBox& a, const HalfOpenBox& b) {
        return a.lo != b.lo ? std::lexicographical_compare(a.lo.begin(), a.lo.end(),
                                                           b.lo.begin(), b.lo.end())
                            : std::lexicographical_compare(a.hi.begin(), a.hi.end(),
                                                           b.hi.begin(), b.hi.end());
    });
    return BoxUnion{std::move(boxes)};
}

Rational ReducedPiece::measure() const {
    if (std::holds_alternative<HalfOpenBox>(shape))
        return std::get<HalfOpenBox>(shape).measure();
    return ring_area(std::get<std::vector<RatPt2>>(shape));
}

namespace {

void split_box_rec(const HalfOpenBox& box, int axis, RatVec& lo_acc, RatVec& hi_acc,
                   std::vector<ReducedPiece>& out) {
    int d = box.dim();
    if (axis == d) {
        IntVec t(d);
        HalfOpenBox piece;
        piece.lo.resize(d);
        piece.hi.resize(d);
        for (int i = 0; i < d; ++i) {
            t[i] = lo_acc[i].floor_int64();
            Rational ti(static_cast<long>(t[i]));
            piece.lo[i] = lo_acc[i] - ti;
            piece.hi[i] = hi_acc[i] - ti;
        }
        out.push_back(ReducedPiece{std::move(piece), std::move(t)});
        return;
    }
    // cut [lo, hi) at every interior integer on this axis
    Rational start = box.lo[axis];
    std::int64_t first = box.lo[axis].floor_int64() + 1;
    std::int64_t last = box.hi[axis].is_integer() ? box.hi[axis].floor_int64() - 1
                                                  : box.hi[axis].floor_int64();
    for (std::int64_t cut = first; cut <= last + 1; ++cut) {
        Rational end = (cut <= last) ? Rational(static_cast<long>(cut)) : box.hi[axis];
        if (start < end) {
            lo_acc[axis] = start;
            hi_acc[axis] = end;
            split_box_rec(box, axis + 1, lo_acc, hi_acc, out);
        }
        start = end;
    }
}

} // namespace

std::vector<RatPt2> clip_ring_to_unit_square(const std::vector<RatPt2>& ring,
                                             const Rational& sx, const Rational& sy) {
    // half-planes as (axis, keep_below, bound): axis 0/1, p[axis] <= bound or >= bound
    struct Plane { int axis; bool upper; Rational bound; };
    const Plane planes[4] = {
        {0, false, sx}, {0, true, sx + 1}, {1, false, sy}, {1, true, sy + 1}};
    std::vector<RatPt2> cur = ring;
    for (const auto& pl : planes) {
        if (cur.empty()) break;
        auto inside = [&](const RatPt2& p) {
            return pl.upper ? p[pl.axis] <= pl.bound : p[pl.axis] >= pl.bound;
        };
        auto intersect = [&](const RatPt2& a, const RatPt2& b) {
            Rational t = (pl.bound - a[pl.axis]) / (b[pl.axis] - a[pl.axis]);
            RatPt2 q;
            q[pl.axis] = pl.bound;
            int other = 1 - pl.axis;
            q[other] = a[other] + t * (b[other] - a[other]);
            return q;
        };
        std::vector<RatPt2> next;
        std::size_t n = cur.size();
        for (std::size_t i = 0; i < n; ++i) {
            const RatPt2& s = cur[i];
            const RatPt2& e = cur[(i + 1) % n];
            bool si = inside(s), ei = inside(e);
            if (si && ei) {
                next.push_back(e);
            } else if (si && !ei) {
                next.push_back(intersect(s, e));
            } else if (!si && ei) {
                next.push_back(intersect(s, e));
                next.push_back(e);
            }
        }
        cur = std::move(next);
    }
    // drop consecutive duplicates
    std::vector<RatPt2> cleaned;
    for (const auto& p : cur)
        if (cleaned.empty() || !(cleaned.back() == p)) cleaned.push_back(p);
    while (cleaned.size() > 1 && cleaned.front() == cleaned.back()) cleaned.pop_back();
    if (cleaned.size() < 3) cleaned.clear();
    return cleaned;
}

std::vector<ReducedPiece> reduce_mod_unit_lattice(const Region& r) {
    std::vector<ReducedPiece> out;
    if (std::holds_alternative<BoxUnion>(r)) {
        const auto& u = std::get<BoxUnion>(r);
        for (const auto& box : u.boxes) {
            RatVec lo_acc(box.dim()), hi_acc(box.dim());
            split_box_rec(box, 0, lo_acc, hi_acc, out);
        }
        return out;
    }
    const auto& poly = std::get<Polygon2D>(r);
    auto [lo, hi] = region_bbox(r);
    std::int64_t x0 = lo[0].floor_int64(), x1 = hi[0].ceil_int64();
    std::int64_t y0 = lo[1].floor_int64(), y1 = hi[1].ceil_int64();
    for (std::int64_t iy = y0; iy < y1; ++iy)
        for (std::int64_t ix = x0; ix < x1; ++ix) {
            Rational sx(static_cast<long>(ix)), sy(static_cast<long>(iy));
            auto ring = clip_ring_to_unit_square(poly.vertices, sx, sy);
            if (ring.empty()) continue;
            if (ring_area(ring) == 0) continue;
            for (auto& p : ring) {
                p[0] -= sx;
                p[1] -= sy;
            }
            out.push_back(ReducedPiece{std::move(ring), IntVec{ix, iy}});
        }
    return out;
}

} // namespace riesz
