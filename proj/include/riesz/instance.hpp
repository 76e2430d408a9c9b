#ifndef RIESZ_INSTANCE_HPP
#define RIESZ_INSTANCE_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "riesz/geometry.hpp"
#include "riesz/lattice.hpp"

namespace riesz {

/// One problem instance as read from JSON.
///
/// Schema:
///   {"dimension": 2,
///    "lattice": {"basis": [["1","0"],["0","1"]]},       // generator columns
///    "region": {"type": "box_union",
///               "boxes": [{"lo":["0","0"],"hi":["2","1"]}]}
///            | {"type": "polygon2d", "vertices": [["0","0"],...]},
///    "level": 2,            // optional; inferred when absent
///    "seed": 42,            // optional, default 0
///    "restarts": 64,        // optional
///    "tolerance": 1e-6,     // optional
///    "resolution": 8,       // optional; default LCM-derived
///    "window": 2,           // optional spectrum radius
///    "shifts": [["0"],["1/2"]]}  // optional selection override
///
/// All rationals travel as strings ("p/q" or "p"); numbers are accepted
/// for integer values.
struct InstanceSpec {
    int dimension = 0;
    Lattice lattice;
    Region region;
    std::optional<long> level;
    std::uint64_t seed = 0;
    int restarts = 64;
    double tolerance = 1e-6;
    std::optional<int> resolution;
    long window = 2;
    std::optional<std::vector<std::vector<double>>> shifts;
};

InstanceSpec parse_instance(const std::string& json_text);
InstanceSpec load_instance(const std::string& path);

} // namespace riesz

#endif
