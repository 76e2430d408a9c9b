#include "riesz/instance.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "riesz/errors.hpp"

namespace riesz {

namespace {

using nlohmann::json;

Rational rat_field(const json& j, const char* what) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_number_float()) {
        // accept exact decimal text only through strings; floats here are
        // almost always a mistake in hand-written geometry
        throw ParseError(std::string(what) + ": write rationals as strings like \"1/2\"");
    }
    throw ParseError(std::string(what) + ": expected a rational");
}

RatVec rat_vector(const json& j, int d, const char* what) {
    if (!j.is_array() || static_cast<int>(j.size()) != d)
        throw ParseError(std::string(what) + ": expected an array of length " +
                         std::to_string(d));
    RatVec v(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) v[static_cast<std::size_t>(i)] = rat_field(j[static_cast<std::size_t>(i)], what);
    return v;
}

Region parse_region(const json& j, int d) {
    if (!j.is_object() || !j.contains("type"))
        throw ParseError("region: expected an object with a type");
    std::string type = j.at("type").get<std::string>();
    if (type == "box_union") {
        if (!j.contains("boxes") || !j.at("boxes").is_array() || j.at("boxes").empty())
            throw ParseError("region.boxes: expected a nonempty array");
        std::vector<HalfOpenBox> boxes;
        for (const auto& bj : j.at("boxes")) {
            HalfOpenBox b;
            b.lo = rat_vector(bj.at("lo"), d, "box.lo");
            b.hi = rat_vector(bj.at("hi"), d, "box.hi");
            boxes.push_back(std::move(b));
        }
        return normalize_box_union(std::move(boxes));
    }
    if (type == "polygon2d") {
        if (d != 2) throw ParseError("polygon2d regions require dimension 2");
        if (!j.contains("vertices") || !j.at("vertices").is_array())
            throw ParseError("region.vertices: expected an array");
        std::vector<RatPt2> verts;
        for (const auto& vj : j.at("vertices")) {
            RatVec v = rat_vector(vj, 2, "vertex");
            verts.push_back(RatPt2{v[0], v[1]});
        }
        return make_polygon(std::move(verts));
    }
    throw ParseError("region.type must be box_union or polygon2d");
}

} // namespace

InstanceSpec parse_instance(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("instance JSON: ") + e.what());
    }
    try {
        InstanceSpec spec;
        spec.dimension = j.at("dimension").get<int>();
        if (spec.dimension < 1 || spec.dimension > 8)
            throw ParseError("dimension must be between 1 and 8");
        int d = spec.dimension;

        const auto& lj = j.at("lattice").at("basis");
        if (!lj.is_array() || static_cast<int>(lj.size()) != d)
            throw ParseError("lattice.basis: expected " + std::to_string(d) + " generator columns");
        RatMat basis(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
        for (int col = 0; col < d; ++col) {
            RatVec column = rat_vector(lj[static_cast<std::size_t>(col)], d, "lattice column");
            for (int row = 0; row < d; ++row)
                basis.at(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) =
                    column[static_cast<std::size_t>(row)];
        }
        spec.lattice = make_lattice(std::move(basis));
        spec.region = parse_region(j.at("region"), d);

        if (j.contains("level")) spec.level = j.at("level").get<long>();
        if (spec.level && *spec.level < 1) throw ParseError("level must be positive");
        if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("restarts")) spec.restarts = j.at("restarts").get<int>();
        if (spec.restarts < 1) throw ParseError("restarts must be positive");
        if (j.contains("tolerance")) spec.tolerance = j.at("tolerance").get<double>();
        if (j.contains("resolution")) {
            spec.resolution = j.at("resolution").get<int>();
            if (*spec.resolution < 1) throw ParseError("resolution must be positive");
        }
        if (j.contains("window")) {
            spec.window = j.at("window").get<long>();
            if (spec.window < 0) throw ParseError("window must be nonnegative");
        }
        if (j.contains("shifts")) {
            std::vector<std::vector<double>> shifts;
            for (const auto& row : j.at("shifts")) {
                std::vector<double> a;
                for (const auto& v : row)
                    a.push_back(v.is_string() ? Rational::parse(v.get<std::string>()).to_double()
                                              : v.get<double>());
                if (static_cast<int>(a.size()) != d)
                    throw ParseError("each shift needs " + std::to_string(d) + " coordinates");
                shifts.push_back(std::move(a));
            }
            if (shifts.empty()) throw ParseError("shifts override must be nonempty");
            spec.shifts = std::move(shifts);
        }
        return spec;
    } catch (const json::exception& e) {
        throw ParseError(std::string("instance JSON: ") + e.what());
    }
}

InstanceSpec load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open instance file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_instance(ss.str());
}

} // namespace riesz
