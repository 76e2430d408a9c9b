#ifndef RIESZ_PIPELINE_HPP
#define RIESZ_PIPELINE_HPP

#include <optional>
#include <string>

#include "riesz/instance.hpp"
#include "riesz/report_io.hpp"
#include "riesz/transform.hpp"

namespace riesz {

/// How far to run: each stage needs everything before it.
enum class Stage {
    Verify,    // normalize, decompose, multiplicity verdict
    Split,     // + splitting into k almost fundamental domains
    Profiles,  // + deduplicated translate profiles
    Select,    // + shift vectors
    Bounds,    // + Riesz constants
    Roundtrip, // + grid, empirical bounds, reconstruction error
    Full       // + spectrum export
};

struct PipelineResult {
    int dim = 0;
    Rational measure_original;
    Rational measure_normalized;
    DensityVerdict density;
    NormalizationMap map;
    Region normalized_region;
    CellComplex complex;
    long k = 0;
    bool level_was_inferred = false;
    MultiplicityReport verdict;
    bool tiling_ok = false;

    std::optional<Splitting> splitting;
    std::optional<ProfileSet> profile_set;
    std::optional<ShiftVectors> shifts;
    bool shifts_overridden = false;
    std::optional<std::vector<ProfileMatrix>> matrices;
    std::optional<RieszReport> bounds;
    std::optional<SampleGrid> grid;
    int resolution = 0;
    std::optional<std::pair<double, double>> empirical;
    std::optional<double> roundtrip_max_rel_error;
    std::optional<std::vector<SpectrumEntry>> freqs;

    std::vector<std::pair<std::string, double>> timings_ms;
};

/// Runs the pipeline up to `target`.  A failed tiling verdict stops the
/// pipeline (tiling_ok = false, later fields absent); the caller decides
/// how to surface it.  Structured errors propagate as exceptions.
PipelineResult run_pipeline(const InstanceSpec& spec, Stage target);

/// Number of deterministic pseudorandom functions behind the pipeline's
/// round-trip error metric.
inline constexpr int kPipelineRoundtripFunctions = 8;

/// Canonical report JSON; with_timings breaks byte-stability and is off
/// by default.
JVal report_json(const PipelineResult& r, bool with_timings = false);

JVal verdict_json(const PipelineResult& r);
JVal splitting_json(const PipelineResult& r);
JVal profiles_json(const PipelineResult& r);
JVal shifts_json(const PipelineResult& r);
JVal bounds_json(const PipelineResult& r);
JVal spectrum_json(const PipelineResult& r);

/// Profile table as CSV (index, tuple, sigma_min, sigma_max, abs_det,
/// support_measure).
std::string profiles_csv(const PipelineResult& r);

/// Deterministic complex test function used by the round-trip metric.
GridFunction random_grid_function(const SampleGrid& grid, SeededRng& rng);

/// max_i |rec_i − f_i| / max_i |f_i|.
double max_relative_error(const GridFunction& f, const GridFunction& rec);

} // namespace riesz

#endif
