// Independent reference computations used by the unit and acceptance tests.
// Nothing here goes through flips, the regularity LP or the enumerator.

#ifndef HURWITZ_TESTS_ORACLES_HPP
#define HURWITZ_TESTS_ORACLES_HPP

#include "hurwitz/combinatorics.hpp"
#include "hurwitz/geometry.hpp"
#include "hurwitz/linalg.hpp"
#include "hurwitz/lp.hpp"
#include "hurwitz/triangulation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

namespace hurwitz::oracle {

/// Normalized volume via the determinant of the edge matrix.
inline Int simplex_volume(const PointConfiguration& config, const std::vector<std::size_t>& idx)
{
    const std::size_t n = config.dim();
    if (idx.size() != n + 1)
        return 0;
    IntMatrix m(n, IntVector(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            m[r][c] = config[idx[r + 1]][c] - config[idx[0]][c];
    const Int d = determinant(m);
    return d < 0 ? -d : d;
}

/// Signed kernel of the affine dependences on `idx` when it is one dimensional
/// and has full support (so idx is a circuit), else empty.
inline IntVector circuit_signs(const PointConfiguration& config, const std::vector<std::size_t>& idx)
{
    const std::size_t n = config.dim();
    IntMatrix m(n + 1, IntVector(idx.size()));
    for (std::size_t c = 0; c < idx.size(); ++c) {
        for (std::size_t r = 0; r < n; ++r)
            m[r][c] = config[idx[c]][r];
        m[n][c] = 1;
    }
    auto kernel = integer_kernel(m, idx.size());
    if (kernel.size() != 1)
        return {};
    for (Int x : kernel.front())
        if (x == 0)
            return {};
    return kernel.front();
}

/// Two full-dimensional simplices meet in a common face iff no circuit on
/// their union has its positive part in one and its negative part in the other.
inline bool intersect_properly(const PointConfiguration& config, Cell a, Cell b)
{
    const auto all = cell_indices(a | b);
    for (std::size_t size = 2; size <= std::min(all.size(), config.dim() + 2); ++size) {
        bool bad = false;
        for_each_combination(all.size(), size, [&](const std::vector<std::size_t>& pick) {
            if (bad)
                return;
            std::vector<std::size_t> idx;
            for (auto p : pick)
                idx.push_back(all[p]);
            auto z = circuit_signs(config, idx);
            if (z.empty())
                return;
            for (int orient = 0; orient < 2 && !bad; ++orient) {
                bool ok = true;
                for (std::size_t t = 0; t < idx.size() && ok; ++t) {
                    const bool positive = (z[t] > 0) == (orient == 0);
                    ok = positive ? (a & bit(idx[t])) != 0 : (b & bit(idx[t])) != 0;
                }
                bad = ok;
            }
        });
        if (bad)
            return false;
    }
    return true;
}

/// Every triangulation (regular or not, fine or not) by exhaustive search
/// over sets of pairwise properly intersecting simplices of full volume.
inline std::vector<Triangulation> all_triangulations(const PointConfiguration& config)
{
    const std::size_t n = config.dim();
    std::vector<Cell> simplices;
    std::vector<Int> volumes;
    for_each_combination(config.size(), n + 1, [&](const std::vector<std::size_t>& idx) {
        Int v = simplex_volume(config, idx);
        if (v > 0) {
            simplices.push_back(cell_from_indices(idx));
            volumes.push_back(v);
        }
    });
    const Int total = lattice_volume(convex_hull(config.points()));
    const std::size_t m = simplices.size();
    std::vector<std::vector<bool>> compatible(m, std::vector<bool>(m, true));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            compatible[i][j] = compatible[j][i] = intersect_properly(config, simplices[i], simplices[j]);

    std::vector<Triangulation> out;
    std::vector<std::size_t> chosen;
    auto search = [&](auto&& self, std::size_t from, Int covered) -> void {
        if (covered == total) {
            std::vector<Cell> cells;
            for (auto c : chosen)
                cells.push_back(simplices[c]);
            out.emplace_back(std::move(cells));
            return;
        }
        for (std::size_t i = from; i < m; ++i) {
            if (covered + volumes[i] > total)
                continue;
            if (!std::all_of(chosen.begin(), chosen.end(), [&](std::size_t c) { return compatible[c][i]; }))
                continue;
            chosen.push_back(i);
            self(self, i + 1, covered + volumes[i]);
            chosen.pop_back();
        }
    };
    search(search, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

inline IntVector gkz_by_hand(const PointConfiguration& config, const Triangulation& t)
{
    IntVector out(config.size(), 0);
    for (auto c : t.cells()) {
        auto idx = cell_indices(c);
        Int v = simplex_volume(config, idx);
        for (auto i : idx)
            out[i] += v;
    }
    return out;
}

/// Regular triangulations are exactly those whose GKZ vectors are vertices of
/// the hull of the GKZ vectors of all triangulations.
inline std::vector<Triangulation> regular_by_gkz(const PointConfiguration& config)
{
    const auto all = all_triangulations(config);
    std::vector<IntVector> vectors;
    for (const auto& t : all)
        vectors.push_back(gkz_by_hand(config, t));
    std::set<IntVector> distinct(vectors.begin(), vectors.end());
    std::map<IntVector, bool> vertex;
    for (const auto& v : distinct) {
        std::vector<RationalVector> others;
        for (const auto& w : distinct)
            if (w != v)
                others.push_back(to_rational(w));
        vertex[v] = others.empty() || !lp::in_convex_hull(others, to_rational(v));
    }
    std::vector<Triangulation> out;
    for (std::size_t i = 0; i < all.size(); ++i)
        if (vertex[vectors[i]])
            out.push_back(all[i]);
    return out;
}

inline std::size_t catalan(std::size_t k)
{
    std::size_t c = 1;
    for (std::size_t i = 0; i < k; ++i)
        c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

}  // namespace hurwitz::oracle

#endif
