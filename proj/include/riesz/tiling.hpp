#ifndef RIESZ_TILING_HPP
#define RIESZ_TILING_HPP

#include <optional>
#include <utility>
#include <vector>

#include "riesz/cells.hpp"

namespace riesz {

/// Verdict of the multiplicity check Σ_t 1_Ω(x − t) = k on every cell.
/// total_mass = Σ measure·multiplicity equals |Ω| for any region, tiling
/// or not.  level is present iff the multiplicity is constant.  When the
/// check fails, violations carries the evidence: every cell with its
/// count if the multiplicity is non-constant, or all cells when it is
/// constant but differs from the requested level.
struct MultiplicityReport {
    std::optional<long> level;
    std::vector<std::pair<int, long>> violations; // (cell index, multiplicity)
    Rational total_mass;

    bool passes(long k) const { return level && *level == k; }
};

MultiplicityReport verify_tiling(const CellComplex& cx, long k);

/// Ω = Ω₁ ∪ … ∪ Ω_k with each part an almost fundamental domain:
/// parts[j] realizes Ω_{j+1} as {cell + t : (cell, t) ∈ parts[j]} where
/// t is the (j+1)-th smallest translate of the cell in lex order.
struct Splitting {
    long k = 0;
    std::vector<std::vector<std::pair<int, IntVec>>> parts;
};

Splitting split(const CellComplex& cx, long k); // NotATilingError if not a k-tiling

/// The sorted translate tuple of a cell; the finite data of one matrix N.
struct TranslateProfile {
    std::vector<IntVec> tuple; // t₁ < t₂ < … < t_k, strictly lex
    Rational support;          // total measure of cells with this tuple
};

struct ProfileSet {
    std::vector<TranslateProfile> profiles; // sorted lex by tuple
    std::vector<int> cell_profile;          // cell index -> profile index
};

ProfileSet profiles(const CellComplex& cx, long k); // NotATilingError if not a k-tiling

} // namespace riesz

#endif
