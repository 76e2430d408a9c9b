#include "riesz/tiling.hpp"

#include <algorithm>
#include <map>

#include "riesz/errors.hpp"

namespace riesz {

MultiplicityReport verify_tiling(const CellComplex& cx, long k) {
    MultiplicityReport rep;
    bool constant = true;
    long first = cx.cells.empty() ? 0 : static_cast<long>(cx.cells.front().translates.size());
    for (const auto& cell : cx.cells) {
        long m = static_cast<long>(cell.translates.size());
        rep.total_mass += cell.measure * Rational(m);
        if (m != first) constant = false;
    }
    if (constant) {
        rep.level = first;
        if (first != k)
            for (int i = 0; i < static_cast<int>(cx.cells.size()); ++i)
                rep.violations.emplace_back(i, first);
    } else {
        for (int i = 0; i < static_cast<int>(cx.cells.size()); ++i)
            rep.violations.emplace_back(i, static_cast<long>(cx.cells[i].translates.size()));
    }
    return rep;
}

Splitting split(const CellComplex& cx, long k) {
    if (!verify_tiling(cx, k).passes(k))
        throw NotATilingError("region is not a level-" + std::to_string(k) + " tiling");
    Splitting s;
    s.k = k;
    s.parts.resize(static_cast<std::size_t>(k));
    for (int ci = 0; ci < static_cast<int>(cx.cells.size()); ++ci) {
        const auto& ts = cx.cells[ci].translates; // already strictly lex-sorted
        for (long j = 0; j < k; ++j)
            s.parts[static_cast<std::size_t>(j)].emplace_back(ci, ts[static_cast<std::size_t>(j)]);
    }
    return s;
}

ProfileSet profiles(const CellComplex& cx, long k) {
    if (!verify_tiling(cx, k).passes(k))
        throw NotATilingError("region is not a level-" + std::to_string(k) + " tiling");
    std::map<std::vector<IntVec>, Rational> support;
    for (const auto& cell : cx.cells) support[cell.translates] += cell.measure;

    ProfileSet ps;
    std::map<std::vector<IntVec>, int> index;
    for (auto& [tuple, m] : support) {
        index[tuple] = static_cast<int>(ps.profiles.size());
        ps.profiles.push_back(TranslateProfile{tuple, m});
    }
    ps.cell_profile.reserve(cx.cells.size());
    for (const auto& cell : cx.cells) ps.cell_profile.push_back(index.at(cell.translates));
    return ps;
}

} // namespace riesz
