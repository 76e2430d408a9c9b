#include "riesz/cells.hpp"

#include <algorithm>
#include <map>

#include "riesz/errors.hpp"

namespace riesz {

Rational Trapezoid::bottom_at(const Rational& x) const {
    return yb0 + (yb1 - yb0) * (x - x0) / (x1 - x0);
}

Rational Trapezoid::top_at(const Rational& x) const {
    return yt0 + (yt1 - yt0) * (x - x0) / (x1 - x0);
}

bool Trapezoid::contains(const RatPt2& p) const {
    if (p[0] < x0 || p[0] >= x1) return false;
    return bottom_at(p[0]) <= p[1] && p[1] < top_at(p[0]);
}

Rational Trapezoid::measure() const {
    return (x1 - x0) * ((yt0 + yt1) - (yb0 + yb1)) / 2;
}

std::vector<RatPt2> Trapezoid::outline() const {
    std::vector<RatPt2> ring;
    ring.push_back({x0, yb0});
    ring.push_back({x1, yb1});
    if (yt1 != yb1) ring.push_back({x1, yt1});
    if (yt0 != yb0) ring.push_back({x0, yt0});
    return ring;
}

bool Cell::contains(const RatVec& p) const {
    if (std::holds_alternative<HalfOpenBox>(shape))
        return std::get<HalfOpenBox>(shape).contains(p);
    return std::get<Trapezoid>(shape).contains(RatPt2{p[0], p[1]});
}

namespace {

// all integer vectors in the hull range, applied to fn
template <typename Fn>
void for_each_translate(const IntVec& tmin, const IntVec& tmax, Fn&& fn) {
    int d = static_cast<int>(tmin.size());
    IntVec t = tmin;
    while (true) {
        fn(t);
        int axis = d - 1;
        while (axis >= 0) {
            if (++t[axis] <= tmax[axis]) break;
            t[axis] = tmin[axis];
            --axis;
        }
        if (axis < 0) break;
    }
}

std::vector<IntVec> witness_translates(const Region& region, const RatVec& witness,
                                       const IntVec& tmin, const IntVec& tmax) {
    std::vector<IntVec> ts;
    for_each_translate(tmin, tmax, [&](const IntVec& t) {
        if (region_contains(region, witness + t)) ts.push_back(t);
    });
    std::sort(ts.begin(), ts.end());
    return ts;
}

CellComplex decompose_grid(const std::vector<ReducedPiece>& pieces, const Region& region) {
    int d = region_dim(region);
    CellComplex cx;
    cx.dim = d;
    cx.axis_breaks.assign(d, {});
    for (int ax = 0; ax < d; ++ax) {
        auto& br = cx.axis_breaks[ax];
        br.push_back(0);
        br.push_back(1);
        for (const auto& piece : pieces) {
            const auto& box = std::get<HalfOpenBox>(piece.shape);
            br.push_back(box.lo[ax]);
            br.push_back(box.hi[ax]);
        }
        std::sort(br.begin(), br.end());
        br.erase(std::unique(br.begin(), br.end()), br.end());
    }

    auto [tmin, tmax] = translate_range(region);
    std::vector<std::size_t> idx(d, 0);
    while (true) {
        Cell cell;
        HalfOpenBox box;
        box.lo.resize(d);
        box.hi.resize(d);
        cell.witness.resize(d);
        for (int ax = 0; ax < d; ++ax) {
            box.lo[ax] = cx.axis_breaks[ax][idx[ax]];
            box.hi[ax] = cx.axis_breaks[ax][idx[ax] + 1];
            cell.witness[ax] = (box.lo[ax] + box.hi[ax]) / 2;
        }
        cell.measure = box.measure();
        cell.translates = witness_translates(region, cell.witness, tmin, tmax);
        cell.shape = std::move(box);
        cx.cells.push_back(std::move(cell));

        int ax = d - 1;
        while (ax >= 0) {
            if (++idx[ax] < cx.axis_breaks[ax].size() - 1) break;
            idx[ax] = 0;
            --ax;
        }
        if (ax < 0) break;
    }
    return cx;
}

struct Seg {
    RatPt2 a, b; // a <= b by (x, y)
};

// x-coordinate of the proper crossing of two segments, if any
std::optional<Rational> proper_crossing_x(const Seg& s, const Seg& t) {
    auto orient = [](const RatPt2& p, const RatPt2& q, const RatPt2& r) {
        return ((q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])).sign();
    };
    int d1 = orient(s.a, s.b, t.a);
    int d2 = orient(s.a, s.b, t.b);
    int d3 = orient(t.a, t.b, s.a);
    int d4 = orient(t.a, t.b, s.b);
    if (!((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0))) return std::nullopt;
    if (!((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) return std::nullopt;
    Rational x1 = s.a[0], y1 = s.a[1], x2 = s.b[0], y2 = s.b[1];
    Rational x3 = t.a[0], y3 = t.a[1], x4 = t.b[0], y4 = t.b[1];
    Rational den = (x1 - x2) * (y3 - y4) - (y1 - y2) * (x3 - x4);
    Rational num = (x1 * y2 - y1 * x2) * (x3 - x4) - (x1 - x2) * (x3 * y4 - y3 * x4);
    return num / den;
}

CellComplex decompose_arrangement(const std::vector<ReducedPiece>& pieces,
                                  const Region& region) {
    CellComplex cx;
    cx.dim = 2;

    std::vector<Seg> segs;
    auto add_seg = [&](RatPt2 a, RatPt2 b) {
        if (a == b) return;
        if (b < a) std::swap(a, b);
        segs.push_back(Seg{std::move(a), std::move(b)});
    };
    add_seg({0, 0}, {1, 0});
    add_seg({0, 1}, {1, 1});
    add_seg({0, 0}, {0, 1});
    add_seg({1, 0}, {1, 1});
    for (const auto& piece : pieces) {
        const auto& ring = std::get<std::vector<RatPt2>>(piece.shape);
        for (std::size_t i = 0; i < ring.size(); ++i)
            add_seg(ring[i], ring[(i + 1) % ring.size()]);
    }

    std::vector<Rational> xs;
    for (const auto& s : segs) {
        xs.push_back(s.a[0]);
        xs.push_back(s.b[0]);
    }
    for (std::size_t i = 0; i < segs.size(); ++i)
        for (std::size_t j = i + 1; j < segs.size(); ++j)
            if (auto x = proper_crossing_x(segs[i], segs[j])) xs.push_back(*x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    if (xs.front() != Rational(0) || xs.back() != Rational(1))
        throw InternalError("arrangement extends outside the unit square");

    auto [tmin, tmax] = translate_range(region);
    cx.slab_x = xs;
    cx.slab_cells.resize(xs.size() - 1);

    for (std::size_t s = 0; s + 1 < xs.size(); ++s) {
        const Rational& xa = xs[s];
        const Rational& xb = xs[s + 1];
        Rational xm = (xa + xb) / 2;

        struct Entry {
            Rational ym, ya, yb;
        };
        std::vector<Entry> stack;
        for (const auto& seg : segs) {
            if (seg.a[0] == seg.b[0]) continue; // vertical: slab boundary only
            if (seg.a[0] > xa || seg.b[0] < xb) continue;
            Rational dx = seg.b[0] - seg.a[0];
            auto y_at = [&](const Rational& x) {
                return seg.a[1] + (seg.b[1] - seg.a[1]) * (x - seg.a[0]) / dx;
            };
            stack.push_back(Entry{y_at(xm), y_at(xa), y_at(xb)});
        }
        std::sort(stack.begin(), stack.end(),
                  [](const Entry& u, const Entry& v) { return u.ym < v.ym; });
        stack.erase(std::unique(stack.begin(), stack.end(),
                                [](const Entry& u, const Entry& v) { return u.ym == v.ym; }),
                    stack.end());
        if (stack.empty() || stack.front().ym != Rational(0) || stack.back().ym != Rational(1))
            throw InternalError("slab stack is not bounded by the square borders");

        for (std::size_t i = 0; i + 1 < stack.size(); ++i) {
            Trapezoid tz{xa, xb, stack[i].ya, stack[i].yb, stack[i + 1].ya, stack[i + 1].yb};
            Cell cell;
            cell.measure = tz.measure();
            if (cell.measure.sign() <= 0)
                throw InternalError("degenerate face escaped the midpoint filter");
            cell.witness = {xm, (stack[i].ym + stack[i + 1].ym) / 2};
            cell.translates = witness_translates(region, cell.witness, tmin, tmax);
            cell.shape = tz;
            cx.slab_cells[s].push_back(static_cast<int>(cx.cells.size()));
            cx.cells.push_back(std::move(cell));
        }
    }
    return cx;
}

} // namespace

CellComplex cell_decompose(const std::vector<ReducedPiece>& pieces, const Region& region) {
    CellComplex cx = std::holds_alternative<BoxUnion>(region)
                         ? decompose_grid(pieces, region)
                         : decompose_arrangement(pieces, region);
    Rational total;
    for (const auto& c : cx.cells) total += c.measure;
    if (total != Rational(1))
        throw InternalError("cell complex does not cover the unit cell: total " + total.str());
    return cx;
}

int CellComplex::locate(const RatVec& p) const {
    if (is_grid()) {
        std::size_t flat = 0;
        for (int ax = 0; ax < dim; ++ax) {
            const auto& br = axis_breaks[ax];
            auto it = std::upper_bound(br.begin(), br.end(), p[ax]);
            if (it == br.begin() || it == br.end())
                throw InternalError("point outside [0,1)^d in locate()");
            std::size_t k = static_cast<std::size_t>(it - br.begin()) - 1;
            flat = flat * (br.size() - 1) + k;
        }
        return static_cast<int>(flat);
    }
    auto it = std::upper_bound(slab_x.begin(), slab_x.end(), p[0]);
    if (it == slab_x.begin() || it == slab_x.end())
        throw InternalError("point outside [0,1)² in locate()");
    std::size_t s = static_cast<std::size_t>(it - slab_x.begin()) - 1;
    for (int ci : slab_cells[s]) {
        const auto& tz = std::get<Trapezoid>(cells[ci].shape);
        if (p[1] < tz.top_at(p[0])) {
            if (!(tz.bottom_at(p[0]) <= p[1]))
                throw InternalError("slab stack gap in locate()");
            return ci;
        }
    }
    throw InternalError("point above the top border in locate()");
}

mpz_class CellComplex::breakpoint_denominator_lcm() const {
    mpz_class l = 1;
    for (const auto& br : axis_breaks)
        for (const auto& b : br)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), b.raw().get_den().get_mpz_t());
    return l;
}

} // namespace riesz
