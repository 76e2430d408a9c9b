#ifndef RIESZ_LATTICE_HPP
#define RIESZ_LATTICE_HPP

#include "riesz/geometry.hpp"
#include "riesz/rational.hpp"

namespace riesz {

/// Full-rank rational lattice Λ = A·ℤ^d; columns of basis generate.
struct Lattice {
    RatMat basis;

    int dim() const { return static_cast<int>(basis.rows); }
    Rational covolume() const; // |det A|, > 0
};

Lattice make_lattice(RatMat basis); // validates det ≠ 0

/// Dual lattice Λ* = A^{-⊤}ℤ^d, exact.
Lattice dual_lattice(const Lattice& l);

/// Change of variables y = A^{-1}x taking Λ to ℤ^d.  dual_forward maps
/// normalized frequencies back: u ↦ A^{-⊤}u in original coordinates.
struct NormalizationMap {
    RatMat forward;      // A^{-1}
    RatMat inverse;      // A
    RatMat dual_forward; // A^{-⊤}
};

struct NormalizedInstance {
    Region region; // over Λ = ℤ^d
    NormalizationMap map;
};

/// Applies y = A^{-1}x to the region.  Box unions must stay axis-aligned
/// (A^{-1} monomial), else NonAxisAlignedError; polygons transform freely.
NormalizedInstance normalize_instance(const Region& region, const Lattice& l);

/// Exact check of |Ω| = k·covol(Λ), the mass identity a level-k tiling
/// must satisfy.  Failure proves non-tiling at level k.
struct DensityVerdict {
    bool pass = false;
    Rational region_measure;
    Rational covolume;
    Rational ratio;      // |Ω| / covol
    bool ratio_integral = false;
    long level_checked = 0;
};

DensityVerdict density_check(const Rational& measure, const Lattice& l, long k);

} // namespace riesz

#endif
