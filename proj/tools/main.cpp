#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "riesz/errors.hpp"
#include "riesz/log.hpp"
#include "riesz/pipeline.hpp"
#include "riesz/svg.hpp"

namespace {

using namespace riesz;

struct CliOptions {
    std::string geometry;
    std::string output;
    std::string format = "json";
    bool timings = false;
    // overrides; negative/unset sentinels filled from the instance file
    long long seed = -1;
    int restarts = -1;
    double tol = -1.0;
    int resolution = -1;
    long window = -1;
};

void apply_overrides(InstanceSpec& spec, const CliOptions& opt) {
    if (opt.seed >= 0) spec.seed = static_cast<std::uint64_t>(opt.seed);
    if (opt.restarts > 0) spec.restarts = opt.restarts;
    if (opt.tol > 0.0) spec.tolerance = opt.tol;
    if (opt.resolution > 0) spec.resolution = opt.resolution;
    if (opt.window >= 0) spec.window = opt.window;
}

void emit(const CliOptions& opt, const std::string& text) {
    if (opt.output.empty()) {
        std::fputs(text.c_str(), stdout);
    } else {
        write_text_file(opt.output, text);
        log::info("wrote ", opt.output);
    }
}

int run(const std::string& cmd, const CliOptions& opt) {
    InstanceSpec spec = load_instance(opt.geometry);
    apply_overrides(spec, opt);

    Stage target = Stage::Full;
    if (cmd == "verify") target = Stage::Verify;
    else if (cmd == "split" || cmd == "render") target = Stage::Profiles;
    else if (cmd == "profiles") target = Stage::Profiles;
    else if (cmd == "select") target = Stage::Select;
    else if (cmd == "bounds") target = Stage::Bounds;
    else if (cmd == "roundtrip") target = Stage::Roundtrip;

    PipelineResult r = run_pipeline(spec, target);

    if (cmd == "verify") {
        emit(opt, report_json(r, false).dump());
        return r.tiling_ok ? 0 : 2;
    }
    if (!r.tiling_ok) {
        std::fputs(verdict_json(r).dump().c_str(), stderr);
        log::error("region is not a level-", r.k, " tiling; stopping");
        return 2;
    }
    if (cmd == "split") {
        emit(opt, splitting_json(r).dump());
    } else if (cmd == "profiles") {
        emit(opt, opt.format == "csv" ? profiles_csv(r) : profiles_json(r).dump());
    } else if (cmd == "select") {
        emit(opt, shifts_json(r).dump());
    } else if (cmd == "bounds") {
        emit(opt, opt.format == "csv" ? profiles_csv(r) : bounds_json(r).dump());
    } else if (cmd == "roundtrip") {
        JVal j = report_json(r, opt.timings);
        emit(opt, j["grid"].dump());
    } else if (cmd == "report") {
        emit(opt, report_json(r, opt.timings).dump());
    } else if (cmd == "render") {
        if (opt.output.empty())
            throw ParseError("render needs --output/-o for the SVG file");
        emit(opt, render_svg(spec, r));
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"riesz-tiler: exponential Riesz bases from multiple lattice tilings"};
    app.require_subcommand(1);

    CliOptions opt;
    const char* names[] = {"verify", "split", "profiles", "select",
                           "bounds", "roundtrip", "report", "render"};
    const char* descs[] = {
        "exact tiling verdict and density identity",
        "split the region into k almost fundamental domains",
        "deduplicated translate profiles with support measures",
        "choose shift vectors by seeded best-of-R restarts",
        "Riesz constants A1, A2, C1, C2 from profile singular values",
        "discrete analysis/synthesis round trip and empirical bounds",
        "full pipeline report",
        "SVG figure of cells, profiles and split parts (d = 2)"};
    for (int i = 0; i < 8; ++i) {
        auto* sub = app.add_subcommand(names[i], descs[i]);
        sub->add_option("-g,--geometry", opt.geometry, "instance JSON file")->required();
        sub->add_option("--seed", opt.seed, "selection seed override");
        sub->add_option("--restarts", opt.restarts, "selection restarts override");
        sub->add_option("--tol", opt.tol, "selection tolerance override");
        sub->add_option("--resolution", opt.resolution, "grid resolution override");
        sub->add_option("--window", opt.window, "spectrum window radius override");
        sub->add_option("-o,--output", opt.output, "output file (default stdout)");
        sub->add_option("--format", opt.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_flag("--timings", opt.timings,
                      "include wall-clock timings (breaks byte-stable output)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }

    try {
        return run(app.get_subcommands().front()->get_name(), opt);
    } catch (const riesz::Error& e) {
        riesz::log::error(e.what());
        return riesz::exit_code(e);
    } catch (const std::exception& e) {
        riesz::log::error("unexpected: ", e.what());
        return 10;
    }
}
