#ifndef RIESZ_CONSTRUCTION_HPP
#define RIESZ_CONSTRUCTION_HPP

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "riesz/lattice.hpp"
#include "riesz/tiling.hpp"

namespace riesz {

/// e(x) = exp(2πi x).
std::complex<double> unit_phase(double x);

/// Deterministic uniform doubles in [0,1) from the fully-specified
/// mt19937_64 stream; identical across platforms for a given seed.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : eng_(seed) {}
    double next_unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    std::uint64_t next_u64() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

/// The chosen shift vectors a₁…a_k ∈ [0,1)^d.  Only e(a_j·t) with
/// integer t is ever evaluated, so [0,1)^d loses nothing.
struct ShiftVectors {
    long k = 0;
    int dim = 0;
    std::vector<std::vector<double>> a; // a[j][axis]
    std::uint64_t seed = 0;
    double quality = 0.0; // min over profiles of σ_min(N)
};

/// N[r][j] = e(a_j · t_r) for one translate profile, with its singular
/// values (descending) and |det N|.
struct ProfileMatrix {
    Eigen::MatrixXcd N;
    Eigen::VectorXd sigma;
    double abs_det = 0.0;
};

ProfileMatrix build_profile_matrix(const TranslateProfile& p, const ShiftVectors& a);

/// Numerical singularity: σ_min at or below k·ε·σ_max.
bool is_singular(const ProfileMatrix& m);

/// det N as a function of the shift tuple; a trigonometric polynomial
/// in a ∈ ℝ^{dk} that is not identically zero when the profile entries
/// are distinct.
std::complex<double> det_as_function_of_shifts(const TranslateProfile& p,
                                               const std::vector<std::vector<double>>& a);

struct SelectionParams {
    int restarts = 64;
    std::uint64_t seed = 0;
    double tolerance = 1e-6;
};

/// Best-of-R randomized selection maximizing q(a) = min_p σ_min(N_p(a)).
/// Throws SelectionFailure when the best candidate stays below tolerance.
ShiftVectors select_shifts(const std::vector<TranslateProfile>& profiles, int dim,
                           const SelectionParams& params);

/// Builds ShiftVectors from explicit values (selection bypass).
ShiftVectors make_shifts(std::vector<std::vector<double>> a,
                         const std::vector<TranslateProfile>& profiles);

struct ProfileBoundsRow {
    double sigma_min = 0.0;
    double sigma_max = 0.0;
    double abs_det = 0.0;
};

/// A₁ = min_p σ_max(N_p)^{-2},  A₂ = max_p σ_min(N_p)^{-2}:
/// A₁‖f‖² ≤ Σ|coeff|² ≤ A₂‖f‖² for the basis coefficients, and the
/// decomposition norms obey the same bounds with C_j = k·A_j.
struct RieszReport {
    double A1 = 0.0, A2 = 0.0;
    double C1 = 0.0, C2 = 0.0;
    long k = 0;
    int worst_profile = -1; // index attaining the smallest σ_min
    double min_abs_det = 0.0;
    std::vector<ProfileBoundsRow> rows;
};

RieszReport riesz_bounds(const std::vector<TranslateProfile>& profiles,
                         const ShiftVectors& a);
RieszReport bounds_from_matrices(const std::vector<ProfileMatrix>& mats, long k);

/// Basis frequencies A^{-⊤}(a_j + m) for m in the symmetric window
/// [-radius, radius]^d, mapped back to original coordinates.
struct SpectrumEntry {
    long j = 0; // shift index, 0-based
    IntVec m;
    std::vector<double> frequency;
};

std::vector<SpectrumEntry> spectrum(const ShiftVectors& a, const NormalizationMap& map,
                                    long window_radius);

} // namespace riesz

#endif
