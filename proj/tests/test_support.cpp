#include "test_support.hpp"

#include <algorithm>
#include <numeric>

#include "riesz/cells.hpp"
#include "riesz/errors.hpp"

namespace riesz::testutil {

HalfOpenBox box1(const char* lo, const char* hi) {
    return HalfOpenBox{{Rational::parse(lo)}, {Rational::parse(hi)}};
}

HalfOpenBox box2(const char* lox, const char* loy, const char* hix, const char* hiy) {
    return HalfOpenBox{{Rational::parse(lox), Rational::parse(loy)},
                       {Rational::parse(hix), Rational::parse(hiy)}};
}

BoxUnion intervals(std::vector<std::pair<const char*, const char*>> ivals) {
    std::vector<HalfOpenBox> boxes;
    for (const auto& [lo, hi] : ivals) boxes.push_back(box1(lo, hi));
    return normalize_box_union(std::move(boxes));
}

Polygon2D polygon(std::vector<std::pair<const char*, const char*>> verts) {
    std::vector<RatPt2> pts;
    for (const auto& [x, y] : verts)
        pts.push_back(RatPt2{Rational::parse(x), Rational::parse(y)});
    return make_polygon(std::move(pts));
}

Polygon2D hexagon5() {
    return polygon({{"0", "0"}, {"2", "0"}, {"3", "1"}, {"3", "2"}, {"1", "2"}, {"0", "1"}});
}

CellComplex complex_of(const Region& region) {
    return cell_decompose(reduce_mod_unit_lattice(region), region);
}

std::vector<IntVec> oracle_translates(const Region& region, const RatVec& x) {
    auto [tmin, tmax] = translate_range(region);
    int d = static_cast<int>(tmin.size());
    std::vector<IntVec> out;
    IntVec t = tmin;
    while (true) {
        if (region_contains(region, x + t)) out.push_back(t);
        int ax = d - 1;
        while (ax >= 0) {
            if (++t[static_cast<std::size_t>(ax)] <= tmax[static_cast<std::size_t>(ax)]) break;
            t[static_cast<std::size_t>(ax)] = tmin[static_cast<std::size_t>(ax)];
            --ax;
        }
        if (ax < 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::complex<double> oracle_perm_det(const TranslateProfile& p,
                                     const std::vector<std::vector<double>>& a) {
    long k = static_cast<long>(p.tuple.size());
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    std::complex<double> det{0.0, 0.0};
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) ++inversions;
        double phase = 0.0;
        for (long r = 0; r < k; ++r) {
            const auto& aj = a[static_cast<std::size_t>(perm[static_cast<std::size_t>(r)])];
            const auto& tr = p.tuple[static_cast<std::size_t>(r)];
            for (std::size_t ax = 0; ax < aj.size(); ++ax)
                phase += aj[ax] * static_cast<double>(tr[ax]);
        }
        std::complex<double> term = unit_phase(phase);
        det += (inversions % 2 == 0) ? term : -term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

Eigen::MatrixXcd oracle_analysis_matrix(const SampleGrid& grid, const ShiftVectors& a,
                                        const std::vector<ProfileMatrix>& mats) {
    long k = grid.k;
    long md = grid.base_count;
    long n = k * md;
    Eigen::MatrixXcd B = Eigen::MatrixXcd::Zero(n, n);

    std::vector<Eigen::MatrixXcd> inv;
    inv.reserve(mats.size());
    for (const auto& m : mats) inv.push_back(m.N.inverse());

    CoefficientArray shapes;
    shapes.k = k;
    shapes.M = grid.M;
    shapes.dim = grid.dim;

    double inv_md = 1.0 / static_cast<double>(md);
    for (long g = 0; g < md; ++g) {
        const auto& bp = grid.base[static_cast<std::size_t>(g)];
        const Eigen::MatrixXcd& ninv = inv[static_cast<std::size_t>(bp.profile)];
        for (long j = 0; j < k; ++j) {
            double aj_x = 0.0;
            for (int ax = 0; ax < grid.dim; ++ax)
                aj_x += a.a[static_cast<std::size_t>(j)][static_cast<std::size_t>(ax)] *
                        bp.xd[static_cast<std::size_t>(ax)];
            std::complex<double> dephase = unit_phase(-aj_x);
            for (long mf = 0; mf < md; ++mf) {
                IntVec m = shapes.freq_of(mf);
                double m_x = 0.0;
                for (int ax = 0; ax < grid.dim; ++ax)
                    m_x += static_cast<double>(m[static_cast<std::size_t>(ax)]) *
                           bp.xd[static_cast<std::size_t>(ax)];
                std::complex<double> row_phase = unit_phase(-m_x) * inv_md;
                for (long r = 0; r < k; ++r)
                    B(j * md + mf, g * k + r) = row_phase * dephase * ninv(j, r);
            }
        }
    }
    // ‖f‖² carries 1/M^d; scale so σ(B)² compares with Σ|c|²/‖f‖²
    return B * std::sqrt(static_cast<double>(md));
}

Rational random_rational(SeededRng& rng, long den) {
    long num = static_cast<long>(rng.next_u64() % static_cast<std::uint64_t>(den));
    return Rational(num, den);
}

RatVec random_point(SeededRng& rng, int dim, long den) {
    RatVec p(static_cast<std::size_t>(dim));
    for (auto& c : p) c = random_rational(rng, den);
    return p;
}

GeneratedTile random_box_tile(SeededRng& rng, int d, long k) {
    // random breakpoint grid of [0,1)^d with denominator-8 cuts
    std::vector<std::vector<Rational>> breaks(static_cast<std::size_t>(d));
    for (auto& br : breaks) {
        br.push_back(0);
        br.push_back(1);
        int cuts = static_cast<int>(rng.next_u64() % 3);
        for (int c = 0; c < cuts; ++c) {
            long num = 1 + static_cast<long>(rng.next_u64() % 7);
            br.push_back(Rational(num, 8));
        }
        std::sort(br.begin(), br.end());
        br.erase(std::unique(br.begin(), br.end()), br.end());
    }

    // translate candidates [0, R]^d with (R+1)^d >= k
    long R = 2;
    while (true) {
        long count = 1;
        for (int i = 0; i < d; ++i) count *= (R + 1);
        if (count >= k) break;
        ++R;
    }
    std::vector<IntVec> candidates;
    IntVec t(static_cast<std::size_t>(d), 0);
    while (true) {
        candidates.push_back(t);
        int ax = d - 1;
        while (ax >= 0) {
            if (++t[static_cast<std::size_t>(ax)] <= R) break;
            t[static_cast<std::size_t>(ax)] = 0;
            --ax;
        }
        if (ax < 0) break;
    }

    std::vector<HalfOpenBox> boxes;
    std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
    while (true) {
        HalfOpenBox cell;
        cell.lo.resize(static_cast<std::size_t>(d));
        cell.hi.resize(static_cast<std::size_t>(d));
        for (int ax = 0; ax < d; ++ax) {
            cell.lo[static_cast<std::size_t>(ax)] = breaks[static_cast<std::size_t>(ax)][idx[static_cast<std::size_t>(ax)]];
            cell.hi[static_cast<std::size_t>(ax)] = breaks[static_cast<std::size_t>(ax)][idx[static_cast<std::size_t>(ax)] + 1];
        }
        // k distinct translates per grid cell: Fisher-Yates prefix
        std::vector<IntVec> pool = candidates;
        for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i) {
            std::size_t j = i + static_cast<std::size_t>(rng.next_u64() % (pool.size() - i));
            std::swap(pool[i], pool[j]);
            HalfOpenBox b = cell;
            for (int ax = 0; ax < d; ++ax) {
                Rational shift(static_cast<long>(pool[i][static_cast<std::size_t>(ax)]));
                b.lo[static_cast<std::size_t>(ax)] += shift;
                b.hi[static_cast<std::size_t>(ax)] += shift;
            }
            boxes.push_back(std::move(b));
        }

        int ax = d - 1;
        while (ax >= 0) {
            if (++idx[static_cast<std::size_t>(ax)] < breaks[static_cast<std::size_t>(ax)].size() - 1) break;
            idx[static_cast<std::size_t>(ax)] = 0;
            --ax;
        }
        if (ax < 0) break;
    }
    return GeneratedTile{normalize_box_union(std::move(boxes)), k};
}

} // namespace riesz::testutil
