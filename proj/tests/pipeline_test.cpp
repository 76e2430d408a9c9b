#include <doctest.h>

#include <json.hpp>
#include <string>
#include <vector>

#include "riesz/errors.hpp"
#include "riesz/pipeline.hpp"
#include "riesz/svg.hpp"
#include "test_support.hpp"

using namespace riesz;

namespace {

const char* kUnitSquare = R"({
  "dimension": 2,
  "lattice": {"basis": [["1","0"],["0","1"]]},
  "region": {"type": "box_union", "boxes": [{"lo": ["0","0"], "hi": ["1","1"]}]},
  "seed": 1
})";

const char* kTwoByOne = R"({
  "dimension": 2,
  "lattice": {"basis": [["1","0"],["0","1"]]},
  "region": {"type": "box_union", "boxes": [{"lo": ["0","0"], "hi": ["2","1"]}]},
  "level": 2,
  "seed": 42,
  "resolution": 4
})";

const char* kBadInterval = R"({
  "dimension": 1,
  "lattice": {"basis": [["1"]]},
  "region": {"type": "box_union", "boxes": [{"lo": ["0"], "hi": ["3/2"]}]}
})";

const char* kTightInterval = R"({
  "dimension": 1,
  "lattice": {"basis": [["1"]]},
  "region": {"type": "box_union", "boxes": [{"lo": ["0"], "hi": ["2"]}]},
  "seed": 7,
  "resolution": 16,
  "shifts": [["0"], ["1/2"]]
})";

// minimal well-formedness scan: every opened tag closes in LIFO order
bool xml_balanced(const std::string& svg) {
    std::vector<std::string> stack;
    std::size_t i = 0;
    while ((i = svg.find('<', i)) != std::string::npos) {
        std::size_t end = svg.find('>', i);
        if (end == std::string::npos) return false;
        std::string tag = svg.substr(i + 1, end - i - 1);
        i = end + 1;
        if (tag.empty()) return false;
        if (tag[0] == '?') continue; // declaration
        if (tag[0] == '/') {
            std::string name = tag.substr(1);
            if (stack.empty() || stack.back() != name) return false;
            stack.pop_back();
        } else if (tag.back() == '/') {
            continue; // self-closing
        } else {
            std::string name = tag.substr(0, tag.find_first_of(" \t\n"));
            stack.push_back(name);
        }
    }
    return stack.empty();
}

std::size_t count_occurrences(const std::string& hay, const std::string& needle) {
    std::size_t n = 0, pos = 0;
    while ((pos = hay.find(needle, pos)) != std::string::npos) {
        ++n;
        pos += needle.size();
    }
    return n;
}

} // namespace

TEST_CASE("unit square pipeline: orthogonal degeneration") {
    InstanceSpec spec = parse_instance(kUnitSquare);
    PipelineResult r = run_pipeline(spec, Stage::Full);
    CHECK(r.tiling_ok);
    CHECK(r.k == 1);
    CHECK(r.level_was_inferred);
    CHECK(r.density.pass);
    REQUIRE(r.bounds);
    CHECK(r.bounds->C1 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.bounds->C2 == doctest::Approx(1.0).epsilon(1e-12));
    REQUIRE(r.roundtrip_max_rel_error);
    CHECK(*r.roundtrip_max_rel_error < 1e-12);
    REQUIRE(r.freqs);
    CHECK(r.freqs->size() == 25); // k=1, window radius 2, d=2
}

TEST_CASE("non-tiling stops the pipeline with evidence") {
    InstanceSpec spec = parse_instance(kBadInterval);
    PipelineResult r = run_pipeline(spec, Stage::Full);
    CHECK(!r.tiling_ok);
    CHECK(!r.verdict.level);
    CHECK(r.verdict.violations.size() == 2);
    CHECK(!r.splitting);
    CHECK(!r.bounds);
    JVal v = verdict_json(r);
    std::string dump = v.dump();
    CHECK(dump.find("\"pass\":false") != std::string::npos);
}

TEST_CASE("shift override reproduces the tight hand instance") {
    InstanceSpec spec = parse_instance(kTightInterval);
    PipelineResult r = run_pipeline(spec, Stage::Full);
    CHECK(r.tiling_ok);
    CHECK(r.k == 2);
    CHECK(r.shifts_overridden);
    REQUIRE(r.bounds);
    CHECK(r.bounds->A1 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(r.bounds->A2 == doctest::Approx(0.5).epsilon(1e-12));
    REQUIRE(r.empirical);
    CHECK(r.empirical->first == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(r.empirical->second == doctest::Approx(0.5).epsilon(1e-10));
    REQUIRE(r.roundtrip_max_rel_error);
    CHECK(*r.roundtrip_max_rel_error < 1e-10);
}

TEST_CASE("reports are byte-identical for identical spec and seed") {
    InstanceSpec spec = parse_instance(kTwoByOne);
    std::string a = report_json(run_pipeline(spec, Stage::Full), false).dump();
    std::string b = report_json(run_pipeline(parse_instance(kTwoByOne), Stage::Full), false).dump();
    CHECK(a == b);
    CHECK(a.find("\"timings_ms\"") == std::string::npos);
}

TEST_CASE("report JSON round-trips through a standard parser") {
    InstanceSpec spec = parse_instance(kTwoByOne);
    PipelineResult r = run_pipeline(spec, Stage::Full);
    std::string text = report_json(r, false).dump();
    auto j = nlohmann::json::parse(text);
    CHECK(j.at("tiling").at("pass").get<bool>());
    CHECK(j.at("tiling").at("level").get<long>() == 2);
    CHECK(j.at("riesz").at("k").get<long>() == 2);
    CHECK(j.at("measure").get<std::string>() == "2");
    // 17-significant-digit doubles survive the round trip exactly
    double a1 = j.at("riesz").at("A1").get<double>();
    CHECK(a1 == r.bounds->A1);
    double q = j.at("shifts").at("quality").get<double>();
    CHECK(q == r.shifts->quality);
    // keys are sorted
    std::string keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys += it.key() + ",";
    CHECK(keys == "dimension,grid,measure,measure_normalized,profiles,riesz,shifts,spectrum,splitting,tiling,");
}

TEST_CASE("csv profile table has one row per profile") {
    InstanceSpec spec = parse_instance(kTwoByOne);
    PipelineResult r = run_pipeline(spec, Stage::Bounds);
    std::string csv = profiles_csv(r);
    std::size_t rows = count_occurrences(csv, "\n");
    CHECK(rows == r.profile_set->profiles.size() + 1); // header + rows
}

TEST_CASE("splitting export lists every cell exactly once per part") {
    InstanceSpec spec = parse_instance(kTwoByOne);
    PipelineResult r = run_pipeline(spec, Stage::Split);
    auto j = nlohmann::json::parse(splitting_json(r).dump());
    CHECK(j.at("k").get<long>() == 2);
    REQUIRE(j.at("parts").size() == 2);
    for (const auto& part : j.at("parts"))
        CHECK(part.size() == r.complex.cells.size());
}

TEST_CASE("render_svg emits one polygon per cell and balanced XML") {
    InstanceSpec spec = parse_instance(kTwoByOne);
    PipelineResult r = run_pipeline(spec, Stage::Profiles);
    std::string svg = render_svg(spec, r);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(xml_balanced(svg));
    CHECK(count_occurrences(svg, "class=\"cell\"") == r.complex.cells.size());
    CHECK(count_occurrences(svg, "class=\"legend\"") == static_cast<std::size_t>(r.k));

    // d=1 refuses
    InstanceSpec one = parse_instance(kTightInterval);
    PipelineResult r1 = run_pipeline(one, Stage::Profiles);
    CHECK_THROWS_AS(render_svg(one, r1), DimensionError);
}

TEST_CASE("hexagon renders with k = 5 parts") {
    std::string spec_text = R"({
      "dimension": 2,
      "lattice": {"basis": [["1","0"],["0","1"]]},
      "region": {"type": "polygon2d",
                 "vertices": [["0","0"],["2","0"],["3","1"],["3","2"],["1","2"],["0","1"]]},
      "seed": 3, "resolution": 4
    })";
    InstanceSpec spec = parse_instance(spec_text);
    PipelineResult r = run_pipeline(spec, Stage::Profiles);
    CHECK(r.k == 5);
    std::string svg = render_svg(spec, r);
    CHECK(xml_balanced(svg));
    CHECK(count_occurrences(svg, "class=\"cell\"") == r.complex.cells.size());
    CHECK(count_occurrences(svg, "class=\"legend\"") == 5);
}

TEST_CASE("instance validation errors") {
    CHECK_THROWS_AS(parse_instance("not json"), ParseError);
    CHECK_THROWS_AS(parse_instance(R"({"dimension": 1})"), ParseError);
    // dimension mismatch between region and lattice
    CHECK_THROWS_AS(parse_instance(R"({
      "dimension": 2,
      "lattice": {"basis": [["1","0"],["0","1"]]},
      "region": {"type": "box_union", "boxes": [{"lo": ["0"], "hi": ["1"]}]}
    })"),
                    ParseError);
    // floats are not exact rationals
    CHECK_THROWS_AS(parse_instance(R"({
      "dimension": 1,
      "lattice": {"basis": [["1"]]},
      "region": {"type": "box_union", "boxes": [{"lo": [0.1], "hi": ["1"]}]}
    })"),
                    ParseError);
    // polygon in d=1
    CHECK_THROWS_AS(parse_instance(R"({
      "dimension": 1,
      "lattice": {"basis": [["1"]]},
      "region": {"type": "polygon2d", "vertices": [["0","0"],["1","0"],["0","1"]]}
    })"),
                    ParseError);
}

TEST_CASE("resolution override propagates the divisibility error") {
    std::string spec_text = R"({
      "dimension": 1,
      "lattice": {"basis": [["1"]]},
      "region": {"type": "box_union",
                 "boxes": [{"lo": ["0"], "hi": ["2/3"]}, {"lo": ["5/3"], "hi": ["3"]}]},
      "resolution": 4
    })";
    CHECK_THROWS_AS(run_pipeline(parse_instance(spec_text), Stage::Roundtrip), ResolutionError);
}

TEST_CASE("error exit codes follow the CLI contract") {
    CHECK(exit_code(ParseError("x")) == 1);
    CHECK(exit_code(OverlapError("x")) == 1);
    CHECK(exit_code(NonAxisAlignedError("x")) == 1);
    CHECK(exit_code(DimensionError("x")) == 1);
    CHECK(exit_code(NotATilingError("x")) == 2);
    CHECK(exit_code(SelectionFailure("x", 0.0)) == 3);
    CHECK(exit_code(SingularProfileError("x")) == 3);
    CHECK(exit_code(ResolutionError("x")) == 4);
}

TEST_CASE("window override changes the spectrum size") {
    std::string spec_text = R"({
      "dimension": 1,
      "lattice": {"basis": [["1"]]},
      "region": {"type": "box_union", "boxes": [{"lo": ["0"], "hi": ["2"]}]},
      "seed": 5, "window": 3
    })";
    PipelineResult r = run_pipeline(parse_instance(spec_text), Stage::Full);
    REQUIRE(r.freqs);
    CHECK(r.freqs->size() == 2 * 7); // k=2, radius 3
}

TEST_CASE("normalized lattice instances report mapped frequencies") {
    std::string spec_text = R"({
      "dimension": 2,
      "lattice": {"basis": [["2","0"],["0","1"]]},
      "region": {"type": "box_union", "boxes": [{"lo": ["0","0"], "hi": ["2","1"]}]},
      "seed": 9, "window": 0
    })";
    PipelineResult r = run_pipeline(parse_instance(spec_text), Stage::Full);
    CHECK(r.k == 1);
    CHECK(r.measure_normalized == Rational(1));
    REQUIRE(r.freqs);
    REQUIRE(r.freqs->size() == 1);
    // normalized frequency a maps through A^{-⊤} = diag(1/2, 1)
    CHECK(r.freqs->front().frequency[0] ==
          doctest::Approx(0.5 * r.shifts->a[0][0]).epsilon(1e-12));
    CHECK(r.freqs->front().frequency[1] ==
          doctest::Approx(r.shifts->a[0][1]).epsilon(1e-12));
}
