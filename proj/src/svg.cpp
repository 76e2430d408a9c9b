#include "riesz/svg.hpp"

#include <cmath>
#include <sstream>

#include "riesz/errors.hpp"

namespace riesz {

namespace {

struct Mapper {
    double minx, miny, maxx, maxy;
    double scale, ox, oy, height;

    std::pair<double, double> operator()(double x, double y) const {
        return {ox + scale * (x - minx), oy + scale * (maxy - y)};
    }
};

std::string color(int i, int n) {
    // golden-angle hue walk keeps neighbors distinguishable
    double hue = std::fmod(137.50776405003785 * i, 360.0);
    int l = (n > 8 && i % 2) ? 65 : 50;
    std::ostringstream os;
    os << "hsl(" << static_cast<int>(hue) << ",70%," << l << "%)";
    return os.str();
}

std::vector<RatPt2> cell_outline(const Cell& c) {
    if (std::holds_alternative<Trapezoid>(c.shape))
        return std::get<Trapezoid>(c.shape).outline();
    const auto& b = std::get<HalfOpenBox>(c.shape);
    return {{b.lo[0], b.lo[1]}, {b.hi[0], b.lo[1]}, {b.hi[0], b.hi[1]}, {b.lo[0], b.hi[1]}};
}

void emit_polygon(std::ostringstream& os, const Mapper& m,
                  const std::vector<std::pair<double, double>>& pts,
                  const std::string& cls, const std::string& fill,
                  const std::string& stroke, double stroke_width) {
    os << "  <polygon class=\"" << cls << "\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        auto [x, y] = m(pts[i].first, pts[i].second);
        os << (i ? " " : "") << x << "," << y;
    }
    os << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\" stroke-width=\""
       << stroke_width << "\"/>\n";
}

std::vector<std::pair<double, double>> to_xy(const std::vector<RatPt2>& ring) {
    std::vector<std::pair<double, double>> out;
    out.reserve(ring.size());
    for (const auto& p : ring) out.emplace_back(p[0].to_double(), p[1].to_double());
    return out;
}

std::vector<std::pair<double, double>> map_ring(const RatMat& a,
                                                const std::vector<RatPt2>& ring) {
    std::vector<std::pair<double, double>> out;
    out.reserve(ring.size());
    for (const auto& p : ring) {
        RatVec w = mat_vec(a, RatVec{p[0], p[1]});
        out.emplace_back(w[0].to_double(), w[1].to_double());
    }
    return out;
}

} // namespace

std::string render_svg(const InstanceSpec& spec, const PipelineResult& r) {
    if (spec.dimension != 2)
        throw DimensionError("render needs a 2-dimensional instance");
    if (!r.splitting || !r.profile_set)
        throw InternalError("render needs the pipeline through split and profiles");

    auto [lo, hi] = region_bbox(spec.region);
    double bx0 = lo[0].to_double(), by0 = lo[1].to_double();
    double bx1 = hi[0].to_double(), by1 = hi[1].to_double();

    const double panel = 320.0, margin = 28.0, gap = 46.0;
    double span = std::max({bx1 - bx0, by1 - by0, 1e-9});
    Mapper cellmap{0.0, 0.0, 1.0, 1.0, panel, margin, margin, panel};
    Mapper omegamap{bx0, by0, bx1, by1, panel / span, margin + panel + gap, margin, panel};
    long k = r.splitting->k;
    double legend_h = 24.0 * static_cast<double>(k) + 40.0;
    double width = 2 * margin + 2 * panel + gap + 150.0;
    double height = std::max(margin * 2 + panel + 30.0, legend_h) + 20.0;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // panel 1: fundamental cell, one polygon per cell, colored by profile
    int nprof = static_cast<int>(r.profile_set->profiles.size());
    for (std::size_t ci = 0; ci < r.complex.cells.size(); ++ci) {
        const Cell& c = r.complex.cells[ci];
        int prof = r.profile_set->cell_profile[ci];
        emit_polygon(os, cellmap, to_xy(cell_outline(c)), "cell", color(prof, nprof),
                     "#333", 0.6);
    }
    os << "  <text x=\"" << margin << "\" y=\"" << margin + panel + 18.0
       << "\" font-size=\"12\">fundamental cell, " << r.complex.cells.size()
       << " cells / " << nprof << " profiles</text>\n";

    // panel 2: region with split parts, in original coordinates
    for (long j = 0; j < k; ++j) {
        const auto& part = r.splitting->parts[static_cast<std::size_t>(j)];
        for (const auto& [ci, t] : part) {
            auto ring = cell_outline(r.complex.cells[static_cast<std::size_t>(ci)]);
            for (auto& p : ring) {
                p[0] += Rational(static_cast<long>(t[0]));
                p[1] += Rational(static_cast<long>(t[1]));
            }
            emit_polygon(os, omegamap, map_ring(r.map.inverse, ring), "part",
                         color(static_cast<int>(j), static_cast<int>(k)), "none", 0.0);
        }
    }

    // lattice points A·m covering the bounding box
    Region norm_bbox = r.normalized_region;
    auto [nlo, nhi] = region_bbox(norm_bbox);
    for (long mx = nlo[0].floor_int64() - 1; mx <= nhi[0].ceil_int64() + 1; ++mx)
        for (long my = nlo[1].floor_int64() - 1; my <= nhi[1].ceil_int64() + 1; ++my) {
            RatVec p = mat_vec(r.map.inverse, RatVec{Rational(mx), Rational(my)});
            double px = p[0].to_double(), py = p[1].to_double();
            if (px < bx0 - 1e-9 || px > bx1 + 1e-9 || py < by0 - 1e-9 || py > by1 + 1e-9)
                continue;
            auto [sx, sy] = omegamap(px, py);
            os << "  <circle class=\"lattice\" cx=\"" << sx << "\" cy=\"" << sy
               << "\" r=\"2.5\" fill=\"black\"/>\n";
        }

    // region outline
    if (std::holds_alternative<Polygon2D>(spec.region)) {
        emit_polygon(os, omegamap, to_xy(std::get<Polygon2D>(spec.region).vertices),
                     "outline", "none", "black", 1.5);
    } else {
        for (const auto& b : std::get<BoxUnion>(spec.region).boxes)
            emit_polygon(os, omegamap,
                         to_xy({{b.lo[0], b.lo[1]},
                                {b.hi[0], b.lo[1]},
                                {b.hi[0], b.hi[1]},
                                {b.lo[0], b.hi[1]}}),
                         "outline", "none", "black", 1.5);
    }
    os << "  <text x=\"" << margin + panel + gap << "\" y=\"" << margin + panel + 18.0
       << "\" font-size=\"12\">region and split parts</text>\n";

    // legend
    double lx = 2 * margin + 2 * panel + gap + 10.0, ly = margin;
    for (long j = 0; j < k; ++j) {
        os << "  <rect class=\"legend\" x=\"" << lx << "\" y=\"" << ly + 24.0 * static_cast<double>(j)
           << "\" width=\"14\" height=\"14\" fill=\"" << color(static_cast<int>(j), static_cast<int>(k))
           << "\" stroke=\"#333\" stroke-width=\"0.5\"/>\n";
        os << "  <text x=\"" << lx + 20.0 << "\" y=\"" << ly + 24.0 * static_cast<double>(j) + 12.0
           << "\" font-size=\"12\">part " << (j + 1) << "</text>\n";
    }

    os << "</svg>\n";
    return os.str();
}

} // namespace riesz
