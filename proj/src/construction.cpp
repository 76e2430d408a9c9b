#include "riesz/construction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "riesz/errors.hpp"
#include "riesz/log.hpp"

namespace riesz {

std::complex<double> unit_phase(double x) {
    double t = 2.0 * std::numbers::pi * x;
    return {std::cos(t), std::sin(t)};
}

namespace {

double shift_dot(const std::vector<double>& a, const IntVec& t) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * static_cast<double>(t[i]);
    return s;
}

Eigen::MatrixXcd profile_matrix(const TranslateProfile& p,
                                const std::vector<std::vector<double>>& a) {
    long k = static_cast<long>(p.tuple.size());
    Eigen::MatrixXcd N(k, k);
    for (long r = 0; r < k; ++r)
        for (long j = 0; j < k; ++j)
            N(r, j) = unit_phase(shift_dot(a[static_cast<std::size_t>(j)],
                                           p.tuple[static_cast<std::size_t>(r)]));
    return N;
}

} // namespace

ProfileMatrix build_profile_matrix(const TranslateProfile& p, const ShiftVectors& a) {
    if (static_cast<long>(p.tuple.size()) != a.k)
        throw InternalError("profile size differs from shift count");
    ProfileMatrix m;
    m.N = profile_matrix(p, a.a);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m.N);
    m.sigma = svd.singularValues();
    m.abs_det = std::abs(m.N.determinant());
    return m;
}

bool is_singular(const ProfileMatrix& m) {
    double lo = m.sigma.minCoeff();
    double hi = m.sigma.maxCoeff();
    return lo <= static_cast<double>(m.N.rows()) * std::numeric_limits<double>::epsilon() * hi;
}

std::complex<double> det_as_function_of_shifts(const TranslateProfile& p,
                                               const std::vector<std::vector<double>>& a) {
    return profile_matrix(p, a).determinant();
}

namespace {

double min_sigma_over_profiles(const std::vector<TranslateProfile>& profiles,
                               const std::vector<std::vector<double>>& a) {
    double q = std::numeric_limits<double>::infinity();
    for (const auto& p : profiles) {
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(profile_matrix(p, a));
        q = std::min(q, svd.singularValues().minCoeff());
    }
    return q;
}

} // namespace

ShiftVectors select_shifts(const std::vector<TranslateProfile>& profiles, int dim,
                           const SelectionParams& params) {
    if (profiles.empty()) throw InternalError("select_shifts needs at least one profile");
    long k = static_cast<long>(profiles.front().tuple.size());

    SeededRng rng(params.seed);
    std::vector<std::vector<double>> best;
    double best_q = -1.0;
    for (int r = 0; r < params.restarts; ++r) {
        std::vector<std::vector<double>> cand(static_cast<std::size_t>(k),
                                              std::vector<double>(dim));
        for (auto& row : cand)
            for (auto& v : row) v = rng.next_unit();
        double q = min_sigma_over_profiles(profiles, cand);
        if (q > best_q) {
            best_q = q;
            best = std::move(cand);
        }
    }
    log::debug("select_shifts: best quality ", best_q, " over ", params.restarts,
               " restarts (seed ", params.seed, ")");
    if (best_q < params.tolerance)
        throw SelectionFailure("shift selection failed: best quality " +
                                   std::to_string(best_q) + " below tolerance " +
                                   std::to_string(params.tolerance),
                               best_q);
    ShiftVectors sv;
    sv.k = k;
    sv.dim = dim;
    sv.a = std::move(best);
    sv.seed = params.seed;
    sv.quality = best_q;
    return sv;
}

ShiftVectors make_shifts(std::vector<std::vector<double>> a,
                         const std::vector<TranslateProfile>& profiles) {
    ShiftVectors sv;
    sv.k = static_cast<long>(a.size());
    sv.dim = a.empty() ? 0 : static_cast<int>(a.front().size());
    sv.a = std::move(a);
    sv.quality = profiles.empty() ? 0.0 : min_sigma_over_profiles(profiles, sv.a);
    return sv;
}

RieszReport bounds_from_matrices(const std::vector<ProfileMatrix>& mats, long k) {
    if (mats.empty()) throw InternalError("no profile matrices");
    RieszReport rep;
    rep.k = k;
    double sig_min_all = std::numeric_limits<double>::infinity();
    double sig_max_all = 0.0;
    rep.min_abs_det = std::numeric_limits<double>::infinity();
    for (int i = 0; i < static_cast<int>(mats.size()); ++i) {
        const auto& m = mats[static_cast<std::size_t>(i)];
        double lo = m.sigma.minCoeff();
        double hi = m.sigma.maxCoeff();
        if (is_singular(m))
            throw SingularProfileError("profile " + std::to_string(i) +
                                       " is singular for these shifts");
        rep.rows.push_back(ProfileBoundsRow{lo, hi, m.abs_det});
        if (lo < sig_min_all) {
            sig_min_all = lo;
            rep.worst_profile = i;
        }
        sig_max_all = std::max(sig_max_all, hi);
        rep.min_abs_det = std::min(rep.min_abs_det, m.abs_det);
    }
    rep.A1 = 1.0 / (sig_max_all * sig_max_all);
    rep.A2 = 1.0 / (sig_min_all * sig_min_all);
    rep.C1 = static_cast<double>(k) * rep.A1;
    rep.C2 = static_cast<double>(k) * rep.A2;
    return rep;
}

RieszReport riesz_bounds(const std::vector<TranslateProfile>& profiles,
                         const ShiftVectors& a) {
    std::vector<ProfileMatrix> mats;
    mats.reserve(profiles.size());
    for (const auto& p : profiles) mats.push_back(build_profile_matrix(p, a));
    return bounds_from_matrices(mats, a.k);
}

std::vector<SpectrumEntry> spectrum(const ShiftVectors& a, const NormalizationMap& map,
                                    long window_radius) {
    int d = a.dim;
    std::vector<double> dual(static_cast<std::size_t>(d * d));
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
            dual[static_cast<std::size_t>(r * d + c)] =
                map.dual_forward.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c))
                    .to_double();

    std::vector<SpectrumEntry> out;
    IntVec m(static_cast<std::size_t>(d), -window_radius);
    for (long j = 0; j < a.k; ++j) {
        std::fill(m.begin(), m.end(), -window_radius);
        while (true) {
            SpectrumEntry e;
            e.j = j;
            e.m = m;
            e.frequency.resize(static_cast<std::size_t>(d));
            for (int r = 0; r < d; ++r) {
                double s = 0.0;
                for (int c = 0; c < d; ++c)
                    s += dual[static_cast<std::size_t>(r * d + c)] *
                         (a.a[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)] +
                          static_cast<double>(m[static_cast<std::size_t>(c)]));
                e.frequency[static_cast<std::size_t>(r)] = s;
            }
            out.push_back(std::move(e));
            int ax = d - 1;
            while (ax >= 0) {
                if (++m[static_cast<std::size_t>(ax)] <= window_radius) break;
                m[static_cast<std::size_t>(ax)] = -window_radius;
                --ax;
            }
            if (ax < 0) break;
        }
    }
    return out;
}

} // namespace riesz
