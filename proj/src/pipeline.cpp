#include "riesz/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "riesz/errors.hpp"
#include "riesz/log.hpp"

namespace riesz {

namespace {

class StageTimer {
public:
    explicit StageTimer(PipelineResult& r) : r_(r) {}
    template <typename Fn>
    auto run(const char* name, Fn&& fn) {
        auto t0 = std::chrono::steady_clock::now();
        auto cleanup = [&] {
            auto t1 = std::chrono::steady_clock::now();
            double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            r_.timings_ms.emplace_back(name, ms);
            log::info("stage ", name, ": ", ms, " ms");
        };
        if constexpr (std::is_void_v<decltype(fn())>) {
            fn();
            cleanup();
        } else {
            auto v = fn();
            cleanup();
            return v;
        }
    }

private:
    PipelineResult& r_;
};

int default_resolution(const CellComplex& cx) {
    if (!cx.is_grid()) return 8;
    mpz_class lcm = cx.breakpoint_denominator_lcm();
    if (!lcm.fits_slong_p())
        throw ResolutionError("breakpoint denominators too large for a sample grid");
    long l = lcm.get_si();
    long m = l;
    while (m < 8) m += l;
    return static_cast<int>(m);
}

} // namespace

GridFunction random_grid_function(const SampleGrid& grid, SeededRng& rng) {
    GridFunction f;
    f.values.reserve(static_cast<std::size_t>(grid.omega_count()));
    for (long i = 0; i < grid.omega_count(); ++i)
        f.values.push_back({2.0 * rng.next_unit() - 1.0, 2.0 * rng.next_unit() - 1.0});
    return f;
}

double max_relative_error(const GridFunction& f, const GridFunction& rec) {
    double scale = 0.0, err = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        scale = std::max(scale, std::abs(f.values[i]));
        err = std::max(err, std::abs(rec.values[i] - f.values[i]));
    }
    return scale > 0.0 ? err / scale : err;
}

PipelineResult run_pipeline(const InstanceSpec& spec, Stage target) {
    PipelineResult r;
    StageTimer timer(r);
    r.dim = spec.dimension;
    r.measure_original = region_measure(spec.region);

    timer.run("normalize", [&] {
        auto ni = normalize_instance(spec.region, spec.lattice);
        r.map = std::move(ni.map);
        r.normalized_region = std::move(ni.region);
        r.measure_normalized = region_measure(r.normalized_region);
    });

    timer.run("decompose_cells", [&] {
        auto pieces = reduce_mod_unit_lattice(r.normalized_region);
        Rational pieces_measure;
        for (const auto& p : pieces) pieces_measure += p.measure();
        if (pieces_measure != r.measure_normalized)
            throw InternalError("reduction lost measure: " + pieces_measure.str() + " vs " +
                                r.measure_normalized.str());
        r.complex = cell_decompose(pieces, r.normalized_region);
    });

    // level: supplied, or the constant multiplicity when one exists
    MultiplicityReport probe = verify_tiling(r.complex, spec.level.value_or(0));
    if (spec.level) {
        r.k = *spec.level;
    } else if (probe.level && *probe.level >= 1) {
        r.k = *probe.level;
        r.level_was_inferred = true;
        log::info("inferred tiling level k = ", r.k);
    } else {
        r.k = 0; // non-tiling; keep the evidence below
    }
    r.density = density_check(r.measure_original, spec.lattice, r.k);
    r.verdict = verify_tiling(r.complex, r.k);
    r.tiling_ok = r.k >= 1 && r.verdict.passes(r.k);
    if (!r.tiling_ok || target == Stage::Verify) return r;

    timer.run("split", [&] { r.splitting = split(r.complex, r.k); });
    if (target == Stage::Split) return r;

    timer.run("profiles", [&] { r.profile_set = profiles(r.complex, r.k); });
    if (target == Stage::Profiles) return r;

    timer.run("select_shifts", [&] {
        if (spec.shifts) {
            if (static_cast<long>(spec.shifts->size()) != r.k)
                throw ParseError("shifts override must supply exactly k = " +
                                 std::to_string(r.k) + " vectors");
            r.shifts = make_shifts(*spec.shifts, r.profile_set->profiles);
            r.shifts->seed = spec.seed;
            r.shifts_overridden = true;
            if (r.shifts->quality < spec.tolerance)
                throw SelectionFailure("shift override quality " +
                                           std::to_string(r.shifts->quality) +
                                           " below tolerance",
                                       r.shifts->quality);
        } else {
            SelectionParams params{spec.restarts, spec.seed, spec.tolerance};
            r.shifts = select_shifts(r.profile_set->profiles, r.dim, params);
        }
    });
    if (target == Stage::Select) return r;

    timer.run("bounds", [&] {
        std::vector<ProfileMatrix> mats;
        mats.reserve(r.profile_set->profiles.size());
        for (const auto& p : r.profile_set->profiles)
            mats.push_back(build_profile_matrix(p, *r.shifts));
        r.matrices = std::move(mats);
        r.bounds = bounds_from_matrices(*r.matrices, r.k);
    });
    if (target == Stage::Bounds) return r;

    timer.run("roundtrip", [&] {
        r.resolution = spec.resolution.value_or(default_resolution(r.complex));
        r.grid = build_grid(r.complex, *r.profile_set, r.k, r.resolution);
        r.empirical = empirical_frame_bounds(*r.grid, *r.matrices);
        SeededRng rng(spec.seed ^ 0x5bd1e995u);
        double worst = 0.0;
        for (int i = 0; i < kPipelineRoundtripFunctions; ++i) {
            GridFunction f = random_grid_function(*r.grid, rng);
            auto coeffs = analyze(f, *r.grid, *r.shifts, *r.matrices);
            auto rec = synthesize(coeffs, *r.grid, *r.shifts);
            worst = std::max(worst, max_relative_error(f, rec));
        }
        r.roundtrip_max_rel_error = worst;
    });
    if (target == Stage::Roundtrip) return r;

    timer.run("spectrum", [&] { r.freqs = spectrum(*r.shifts, r.map, spec.window); });
    return r;
}

namespace {

JVal rat(const Rational& q) { return JVal(q.str()); }

JVal intvec_json(const IntVec& t) {
    JVal a = JVal::array();
    for (auto v : t) a.push(static_cast<long long>(v));
    return a;
}

JVal ratvec_json(const RatVec& v) {
    JVal a = JVal::array();
    for (const auto& q : v) a.push(rat(q));
    return a;
}

JVal cell_json(const CellComplex& cx, int index) {
    const Cell& c = cx.cells[static_cast<std::size_t>(index)];
    JVal j = JVal::object();
    j["index"] = index;
    j["measure"] = rat(c.measure);
    j["witness"] = ratvec_json(c.witness);
    if (std::holds_alternative<HalfOpenBox>(c.shape)) {
        const auto& b = std::get<HalfOpenBox>(c.shape);
        j["lo"] = ratvec_json(b.lo);
        j["hi"] = ratvec_json(b.hi);
    } else {
        const auto& tz = std::get<Trapezoid>(c.shape);
        JVal ring = JVal::array();
        for (const auto& p : tz.outline()) ring.push(ratvec_json(RatVec{p[0], p[1]}));
        j["outline"] = ring;
    }
    return j;
}

} // namespace

JVal verdict_json(const PipelineResult& r) {
    JVal j = JVal::object();
    j["level"] = r.verdict.level ? JVal(static_cast<long long>(*r.verdict.level)) : JVal(nullptr);
    j["level_requested"] = static_cast<long long>(r.k);
    j["level_inferred"] = r.level_was_inferred;
    j["pass"] = r.tiling_ok;
    j["total_mass"] = rat(r.verdict.total_mass);
    j["cells"] = static_cast<long long>(r.complex.cells.size());
    JVal viol = JVal::array();
    for (const auto& [ci, mult] : r.verdict.violations) {
        JVal v = JVal::object();
        v["cell"] = cell_json(r.complex, ci);
        v["multiplicity"] = static_cast<long long>(mult);
        viol.push(std::move(v));
    }
    j["violations"] = std::move(viol);
    JVal dens = JVal::object();
    dens["pass"] = r.density.pass;
    dens["region_measure"] = rat(r.density.region_measure);
    dens["covolume"] = rat(r.density.covolume);
    dens["ratio"] = rat(r.density.ratio);
    dens["ratio_integral"] = r.density.ratio_integral;
    j["density_identity"] = std::move(dens);
    return j;
}

JVal splitting_json(const PipelineResult& r) {
    JVal j = JVal::object();
    j["k"] = static_cast<long long>(r.splitting ? r.splitting->k : 0);
    JVal parts = JVal::array();
    if (r.splitting) {
        for (const auto& part : r.splitting->parts) {
            JVal pj = JVal::array();
            for (const auto& [ci, t] : part) {
                JVal e = JVal::object();
                e["cell"] = cell_json(r.complex, ci);
                e["translate"] = intvec_json(t);
                pj.push(std::move(e));
            }
            parts.push(std::move(pj));
        }
    }
    j["parts"] = std::move(parts);
    return j;
}

JVal profiles_json(const PipelineResult& r) {
    JVal arr = JVal::array();
    if (r.profile_set) {
        for (const auto& p : r.profile_set->profiles) {
            JVal e = JVal::object();
            JVal tuple = JVal::array();
            for (const auto& t : p.tuple) tuple.push(intvec_json(t));
            e["tuple"] = std::move(tuple);
            e["support_measure"] = rat(p.support);
            arr.push(std::move(e));
        }
    }
    JVal j = JVal::object();
    j["profiles"] = std::move(arr);
    return j;
}

JVal shifts_json(const PipelineResult& r) {
    JVal j = JVal::object();
    if (r.shifts) {
        j["k"] = static_cast<long long>(r.shifts->k);
        j["dim"] = r.shifts->dim;
        j["seed"] = static_cast<unsigned long long>(r.shifts->seed);
        j["quality"] = r.shifts->quality;
        j["overridden"] = r.shifts_overridden;
        JVal a = JVal::array();
        for (const auto& row : r.shifts->a) {
            JVal rj = JVal::array();
            for (double v : row) rj.push(v);
            a.push(std::move(rj));
        }
        j["a"] = std::move(a);
    }
    return j;
}

JVal bounds_json(const PipelineResult& r) {
    JVal j = JVal::object();
    if (r.bounds && r.shifts && r.profile_set) {
        j["A1"] = r.bounds->A1;
        j["A2"] = r.bounds->A2;
        j["C1"] = r.bounds->C1;
        j["C2"] = r.bounds->C2;
        j["k"] = static_cast<long long>(r.bounds->k);
        j["seed"] = static_cast<unsigned long long>(r.shifts->seed);
        j["quality"] = r.shifts->quality;
        j["worst_profile"] = r.bounds->worst_profile;
        j["min_abs_det"] = r.bounds->min_abs_det;
        JVal rows = JVal::array();
        for (std::size_t i = 0; i < r.bounds->rows.size(); ++i) {
            const auto& p = r.profile_set->profiles[i];
            const auto& row = r.bounds->rows[i];
            JVal e = JVal::object();
            JVal tuple = JVal::array();
            for (const auto& t : p.tuple) tuple.push(intvec_json(t));
            e["tuple"] = std::move(tuple);
            e["sigma_min"] = row.sigma_min;
            e["sigma_max"] = row.sigma_max;
            e["abs_det"] = row.abs_det;
            e["support_measure"] = rat(p.support);
            rows.push(std::move(e));
        }
        j["profiles"] = std::move(rows);
    }
    return j;
}

JVal spectrum_json(const PipelineResult& r) {
    JVal arr = JVal::array();
    if (r.freqs) {
        for (const auto& e : *r.freqs) {
            JVal f = JVal::object();
            f["j"] = static_cast<long long>(e.j);
            f["m"] = intvec_json(e.m);
            JVal fr = JVal::array();
            for (double v : e.frequency) fr.push(v);
            f["frequency"] = std::move(fr);
            arr.push(std::move(f));
        }
    }
    JVal j = JVal::object();
    j["frequencies"] = std::move(arr);
    return j;
}

JVal report_json(const PipelineResult& r, bool with_timings) {
    JVal j = JVal::object();
    j["dimension"] = r.dim;
    j["measure"] = rat(r.measure_original);
    j["measure_normalized"] = rat(r.measure_normalized);
    j["tiling"] = verdict_json(r);
    if (r.splitting) {
        // the full per-cell splitting is available via the split command;
        // the report keeps the per-part mass summary
        JVal s = JVal::object();
        s["k"] = static_cast<long long>(r.splitting->k);
        JVal masses = JVal::array();
        for (const auto& part : r.splitting->parts) {
            Rational m;
            for (const auto& [ci, t] : part)
                m += r.complex.cells[static_cast<std::size_t>(ci)].measure;
            masses.push(rat(m));
        }
        s["part_measures"] = std::move(masses);
        j["splitting"] = std::move(s);
    }
    if (r.profile_set) j["profiles"] = profiles_json(r)["profiles"];
    if (r.shifts) j["shifts"] = shifts_json(r);
    if (r.bounds) j["riesz"] = bounds_json(r);
    if (r.grid) {
        JVal g = JVal::object();
        g["resolution"] = r.resolution;
        g["base_points"] = static_cast<long long>(r.grid->base_count);
        JVal absent = JVal::array();
        for (int p : r.grid->absent_profiles) absent.push(p);
        g["absent_profiles"] = std::move(absent);
        if (r.empirical) {
            g["empirical_low"] = r.empirical->first;
            g["empirical_high"] = r.empirical->second;
        }
        if (r.roundtrip_max_rel_error)
            g["roundtrip_max_rel_error"] = *r.roundtrip_max_rel_error;
        j["grid"] = std::move(g);
    }
    if (r.freqs) j["spectrum"] = spectrum_json(r)["frequencies"];
    if (with_timings) {
        JVal t = JVal::object();
        for (const auto& [name, ms] : r.timings_ms) t[name] = ms;
        j["timings_ms"] = std::move(t);
    }
    return j;
}

std::string profiles_csv(const PipelineResult& r) {
    std::ostringstream os;
    os << "profile,tuple,sigma_min,sigma_max,abs_det,support_measure\n";
    if (!r.profile_set) return os.str();
    for (std::size_t i = 0; i < r.profile_set->profiles.size(); ++i) {
        const auto& p = r.profile_set->profiles[i];
        os << i << ",\"";
        for (std::size_t t = 0; t < p.tuple.size(); ++t) {
            if (t) os << ";";
            os << "(";
            for (std::size_t ax = 0; ax < p.tuple[t].size(); ++ax) {
                if (ax) os << " ";
                os << p.tuple[t][ax];
            }
            os << ")";
        }
        os << "\"";
        if (r.bounds && i < r.bounds->rows.size()) {
            const auto& row = r.bounds->rows[i];
            os << "," << format_double_17(row.sigma_min) << ","
               << format_double_17(row.sigma_max) << "," << format_double_17(row.abs_det);
        } else {
            os << ",,,";
        }
        os << "," << p.support.str() << "\n";
    }
    return os.str();
}

} // namespace riesz
