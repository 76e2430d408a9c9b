#ifndef RIESZ_SVG_HPP
#define RIESZ_SVG_HPP

#include <string>

#include "riesz/pipeline.hpp"

namespace riesz {

/// Two-panel figure for d = 2 instances: the fundamental cell with one
/// polygon per cell colored by profile, and the region in original
/// coordinates with the k split parts colored, lattice points, and the
/// region outline.  Requires the pipeline to have run through Split and
/// Profiles; throws DimensionError when d ≠ 2.
std::string render_svg(const InstanceSpec& spec, const PipelineResult& r);

} // namespace riesz

#endif
