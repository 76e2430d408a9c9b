#ifndef RIESZ_TRANSFORM_HPP
#define RIESZ_TRANSFORM_HPP

#include <complex>
#include <vector>

#include "riesz/construction.hpp"

namespace riesz {

/// Discrete model of the analysis/synthesis pipeline.  Base points are
/// the cell-interior offsets (g+½)/M, g ∈ {0,…,M−1}^d, so no sample ever
/// touches a cell or region boundary; each base point carries the k
/// region samples x + t_r given by its cell.
struct SampleGrid {
    int M = 0;
    int dim = 0;
    long k = 0;
    long base_count = 0; // M^d

    struct BasePoint {
        RatVec x;              // exact coordinates
        std::vector<double> xd;
        int cell = -1;
        int profile = -1;
    };
    std::vector<BasePoint> base;
    std::vector<const std::vector<IntVec>*> translates; // per base point, from its cell
    std::vector<int> absent_profiles; // profiles with no base point at this M

    long omega_count() const { return k * base_count; }
};

/// Geometry-only grid: base points located in their cells, no tiling
/// assumption (profiles stay -1, k stays 0).  Builds for any region.
SampleGrid build_geometry_grid(const CellComplex& cx, int M);

/// Builds the full grid.  Box complexes require M to be a multiple of
/// the LCM of all breakpoint denominators (ResolutionError otherwise);
/// polygon complexes accept any M and report uncovered profiles.
/// Refuses (NotATilingError) when any cell multiplicity differs from k.
SampleGrid build_grid(const CellComplex& cx, const ProfileSet& ps, long k, int M);

/// Complex samples: on Ω, values[g*k + r] = f(x_g + t_r); on the base
/// grid (one Λ-periodic piece), values[g] = f_j(x_g).
struct GridFunction {
    std::vector<std::complex<double>> values;
};

/// Fourier coefficients of the periodic pieces: c[j][m] over the
/// centered window of M integer frequencies per axis,
/// m(axis) ∈ {−⌊M/2⌋, …, M−1−⌊M/2⌋}, flattened row-major.
struct CoefficientArray {
    long k = 0;
    int M = 0;
    int dim = 0;
    std::vector<std::complex<double>> c; // size k * M^d

    std::complex<double>& at(long j, long mflat) { return c[static_cast<std::size_t>(j * pow_md() + mflat)]; }
    std::complex<double> at(long j, long mflat) const { return c[static_cast<std::size_t>(j * pow_md() + mflat)]; }
    long pow_md() const;
    /// Frequency vector of a flattened window index.
    IntVec freq_of(long mflat) const;
    /// Flattened index of a frequency inside the window, -1 if outside.
    long index_of(const IntVec& m) const;
};

/// Per-point k×k solves F̃ = diag(e(−a_j·x))·N⁻¹·F; returns the k
/// periodic pieces sampled on the base grid.
std::vector<GridFunction> decompose(const GridFunction& f, const SampleGrid& grid,
                                    const ShiftVectors& a,
                                    const std::vector<ProfileMatrix>& mats);

/// decompose + per-piece normalized DFT (forward factor 1/M^d), with the
/// half-sample phase of base points applied exactly; discrete Parseval:
/// Σ_m |c[j][m]|² = (1/M^d) Σ_g |f_j(x_g)|².
CoefficientArray analyze(const GridFunction& f, const SampleGrid& grid,
                         const ShiftVectors& a, const std::vector<ProfileMatrix>& mats);

/// f(x+t_r) = Σ_j Σ_m c[j][m] e((a_j+m)·(x+t_r)) on every Ω sample.
GridFunction synthesize(const CoefficientArray& c, const SampleGrid& grid,
                        const ShiftVectors& a);

/// Extreme values of Σ|c|²/‖f‖² over the discrete model: exactly
/// (min 1/σ_max(N)², max 1/σ_min(N)²) over profiles present in the grid.
std::pair<double, double> empirical_frame_bounds(const SampleGrid& grid,
                                                 const std::vector<ProfileMatrix>& mats);

/// ‖f‖² in the discrete normalization (1/M^d)·Σ|values|².
double grid_norm_sq(const GridFunction& f, const SampleGrid& grid);

} // namespace riesz

#endif
