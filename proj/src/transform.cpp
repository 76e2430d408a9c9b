#include "riesz/transform.hpp"

#include <algorithm>
#include <limits>

#include "riesz/errors.hpp"
#include "riesz/log.hpp"

namespace riesz {

long CoefficientArray::pow_md() const {
    long n = 1;
    for (int i = 0; i < dim; ++i) n *= M;
    return n;
}

IntVec CoefficientArray::freq_of(long mflat) const {
    IntVec m(static_cast<std::size_t>(dim));
    long rest = mflat;
    for (int ax = dim - 1; ax >= 0; --ax) {
        long g = rest % M;
        rest /= M;
        m[static_cast<std::size_t>(ax)] = g - M / 2;
    }
    return m;
}

long CoefficientArray::index_of(const IntVec& m) const {
    long flat = 0;
    for (int ax = 0; ax < dim; ++ax) {
        long g = m[static_cast<std::size_t>(ax)] + M / 2;
        if (g < 0 || g >= M) return -1;
        flat = flat * M + g;
    }
    return flat;
}

SampleGrid build_geometry_grid(const CellComplex& cx, int M) {
    if (M <= 0) throw ResolutionError("resolution must be positive");
    if (cx.is_grid()) {
        mpz_class lcm = cx.breakpoint_denominator_lcm();
        if (mpz_class(M) % lcm != 0)
            throw ResolutionError("resolution " + std::to_string(M) +
                                  " is not a multiple of the breakpoint denominator LCM " +
                                  lcm.get_str());
    }

    SampleGrid grid;
    grid.M = M;
    grid.dim = cx.dim;
    grid.base_count = 1;
    for (int i = 0; i < cx.dim; ++i) grid.base_count *= M;

    Rational twoM(2L * M, 1);
    std::vector<long> g(static_cast<std::size_t>(cx.dim), 0);
    for (long flat = 0; flat < grid.base_count; ++flat) {
        SampleGrid::BasePoint bp;
        bp.x.resize(static_cast<std::size_t>(cx.dim));
        for (int ax = 0; ax < cx.dim; ++ax)
            bp.x[static_cast<std::size_t>(ax)] =
                Rational(2 * g[static_cast<std::size_t>(ax)] + 1) / twoM;
        bp.xd = to_doubles(bp.x);
        bp.cell = cx.locate(bp.x);
        grid.translates.push_back(&cx.cells[static_cast<std::size_t>(bp.cell)].translates);
        grid.base.push_back(std::move(bp));

        int ax = cx.dim - 1;
        while (ax >= 0) {
            if (++g[static_cast<std::size_t>(ax)] < M) break;
            g[static_cast<std::size_t>(ax)] = 0;
            --ax;
        }
    }
    return grid;
}

SampleGrid build_grid(const CellComplex& cx, const ProfileSet& ps, long k, int M) {
    SampleGrid grid = build_geometry_grid(cx, M);
    grid.k = k;
    std::vector<bool> seen(ps.profiles.size(), false);
    for (auto& bp : grid.base) {
        bp.profile = ps.cell_profile[static_cast<std::size_t>(bp.cell)];
        seen[static_cast<std::size_t>(bp.profile)] = true;
        if (static_cast<long>(cx.cells[static_cast<std::size_t>(bp.cell)].translates.size()) != k)
            throw NotATilingError("grid cell multiplicity differs from level k");
    }
    for (std::size_t p = 0; p < seen.size(); ++p)
        if (!seen[p]) grid.absent_profiles.push_back(static_cast<int>(p));
    if (!grid.absent_profiles.empty())
        log::warn("resolution ", M, " misses ", grid.absent_profiles.size(),
                  " profile(s); empirical bounds cover the present ones only");
    return grid;
}

namespace {

void check_f_size(const GridFunction& f, const SampleGrid& grid) {
    if (static_cast<long>(f.values.size()) != grid.omega_count())
        throw InternalError("grid function size mismatch");
}

} // namespace

std::vector<GridFunction> decompose(const GridFunction& f, const SampleGrid& grid,
                                    const ShiftVectors& a,
                                    const std::vector<ProfileMatrix>& mats) {
    check_f_size(f, grid);
    long k = grid.k;
    std::vector<Eigen::PartialPivLU<Eigen::MatrixXcd>> lus;
    lus.reserve(mats.size());
    for (const auto& m : mats) {
        if (is_singular(m))
            throw SingularProfileError("profile matrix singular in decompose");
        lus.emplace_back(m.N);
    }

    std::vector<GridFunction> pieces(static_cast<std::size_t>(k));
    for (auto& p : pieces) p.values.resize(static_cast<std::size_t>(grid.base_count));

    Eigen::VectorXcd F(k), Ft(k);
    for (long gi = 0; gi < grid.base_count; ++gi) {
        const auto& bp = grid.base[static_cast<std::size_t>(gi)];
        for (long r = 0; r < k; ++r)
            F(r) = f.values[static_cast<std::size_t>(gi * k + r)];
        Ft = lus[static_cast<std::size_t>(bp.profile)].solve(F);
        for (long j = 0; j < k; ++j) {
            double aj_x = 0.0;
            for (int ax = 0; ax < grid.dim; ++ax)
                aj_x += a.a[static_cast<std::size_t>(j)][static_cast<std::size_t>(ax)] *
                        bp.xd[static_cast<std::size_t>(ax)];
            pieces[static_cast<std::size_t>(j)].values[static_cast<std::size_t>(gi)] =
                unit_phase(-aj_x) * Ft(j);
        }
    }
    return pieces;
}

CoefficientArray analyze(const GridFunction& f, const SampleGrid& grid,
                         const ShiftVectors& a, const std::vector<ProfileMatrix>& mats) {
    auto pieces = decompose(f, grid, a, mats);
    CoefficientArray ca;
    ca.k = grid.k;
    ca.M = grid.M;
    ca.dim = grid.dim;
    long md = grid.base_count;
    ca.c.assign(static_cast<std::size_t>(ca.k * md), {0.0, 0.0});

    double inv_md = 1.0 / static_cast<double>(md);
    for (long j = 0; j < ca.k; ++j)
        for (long mf = 0; mf < md; ++mf) {
            IntVec m = ca.freq_of(mf);
            std::complex<double> s{0.0, 0.0};
            for (long gi = 0; gi < md; ++gi) {
                const auto& bp = grid.base[static_cast<std::size_t>(gi)];
                double m_x = 0.0;
                for (int ax = 0; ax < grid.dim; ++ax)
                    m_x += static_cast<double>(m[static_cast<std::size_t>(ax)]) *
                           bp.xd[static_cast<std::size_t>(ax)];
                s += pieces[static_cast<std::size_t>(j)].values[static_cast<std::size_t>(gi)] *
                     unit_phase(-m_x);
            }
            ca.at(j, mf) = s * inv_md;
        }
    return ca;
}

GridFunction synthesize(const CoefficientArray& c, const SampleGrid& grid,
                        const ShiftVectors& a) {
    if (c.M != grid.M || c.dim != grid.dim || c.k != grid.k)
        throw InternalError("coefficient window does not match the grid");
    long k = grid.k;
    long md = grid.base_count;

    // inverse DFT per piece, then recombine with the shift phases; the
    // integer part e(m·t) is identically 1 and drops out exactly
    std::vector<std::vector<std::complex<double>>> pieces(
        static_cast<std::size_t>(k),
        std::vector<std::complex<double>>(static_cast<std::size_t>(md), {0.0, 0.0}));
    for (long j = 0; j < k; ++j)
        for (long gi = 0; gi < md; ++gi) {
            const auto& bp = grid.base[static_cast<std::size_t>(gi)];
            std::complex<double> s{0.0, 0.0};
            for (long mf = 0; mf < md; ++mf) {
                IntVec m = c.freq_of(mf);
                double m_x = 0.0;
                for (int ax = 0; ax < grid.dim; ++ax)
                    m_x += static_cast<double>(m[static_cast<std::size_t>(ax)]) *
                           bp.xd[static_cast<std::size_t>(ax)];
                s += c.at(j, mf) * unit_phase(m_x);
            }
            pieces[static_cast<std::size_t>(j)][static_cast<std::size_t>(gi)] = s;
        }

    GridFunction f;
    f.values.assign(static_cast<std::size_t>(grid.omega_count()), {0.0, 0.0});
    for (long gi = 0; gi < md; ++gi) {
        const auto& bp = grid.base[static_cast<std::size_t>(gi)];
        const auto& ts = *grid.translates[static_cast<std::size_t>(gi)];
        for (long r = 0; r < k; ++r) {
            std::complex<double> s{0.0, 0.0};
            for (long j = 0; j < k; ++j) {
                double aj_xt = 0.0;
                for (int ax = 0; ax < grid.dim; ++ax)
                    aj_xt += a.a[static_cast<std::size_t>(j)][static_cast<std::size_t>(ax)] *
                             (bp.xd[static_cast<std::size_t>(ax)] +
                              static_cast<double>(ts[static_cast<std::size_t>(r)]
                                                    [static_cast<std::size_t>(ax)]));
                s += unit_phase(aj_xt) * pieces[static_cast<std::size_t>(j)][static_cast<std::size_t>(gi)];
            }
            f.values[static_cast<std::size_t>(gi * k + r)] = s;
        }
    }
    return f;
}

std::pair<double, double> empirical_frame_bounds(const SampleGrid& grid,
                                                 const std::vector<ProfileMatrix>& mats) {
    std::vector<bool> present(mats.size(), true);
    for (int p : grid.absent_profiles) present[static_cast<std::size_t>(p)] = false;
    double low = std::numeric_limits<double>::infinity();
    double high = 0.0;
    for (std::size_t p = 0; p < mats.size(); ++p) {
        if (!present[p]) continue;
        double smin = mats[p].sigma.minCoeff();
        double smax = mats[p].sigma.maxCoeff();
        if (is_singular(mats[p]))
            throw SingularProfileError("singular profile in frame bounds");
        low = std::min(low, 1.0 / (smax * smax));
        high = std::max(high, 1.0 / (smin * smin));
    }
    return {low, high};
}

double grid_norm_sq(const GridFunction& f, const SampleGrid& grid) {
    double s = 0.0;
    for (const auto& v : f.values) s += std::norm(v);
    return s / static_cast<double>(grid.base_count);
}

} // namespace riesz
