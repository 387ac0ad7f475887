#include "hurwitz/prism.hpp"

#include "hurwitz/error.hpp"

#include <algorithm>
#include <unordered_set>

namespace hurwitz {

PointConfiguration prism_configuration(const PointConfiguration& base)
{
    if (base.dim() != 2)
        throw Error(ErrorCode::DimensionUnsupported, "the prism construction needs a planar configuration");
    if (2 * base.size() > PointConfiguration::max_points)
        throw Error(ErrorCode::InvalidArgument, "configuration too large for its prism");
    std::vector<IntVector> points;
    for (int h = 0; h < 2; ++h)
        for (const auto& p : base.points())
            points.push_back({p[0], p[1], h});
    return PointConfiguration(std::move(points), base.name().empty() ? std::string{} : base.name() + "-prism");
}

PrismContext::PrismContext(const PointConfiguration& base)
    : base_(base), triangulations_(prism_configuration(base)), weights_(triangulations_.config())
{
}

WeightVector PrismContext::nu(const Triangulation& t) const
{
    const auto m = weights_.massive_gkz(t);
    WeightVector out{IntVector(base_.size(), 0), WeightKind::Nu};
    for (std::size_t i = 0; i < base_.size(); ++i)
        out.values[i] = m.values[lower(i)] + m.values[upper(i)];
    return out;
}

std::vector<CubicMixedSimplex> PrismContext::cubic_mixed(const Triangulation& t) const
{
    const std::unordered_set<Cell> cells(t.cells().begin(), t.cells().end());
    const Cell lower_mask = bit(base_.size()) - 1;
    std::vector<CubicMixedSimplex> out;
    for (auto c : t.cells()) {
        const Cell lo = c & lower_mask;
        const Cell up = c >> base_.size();
        if (cell_size(lo) != 2 || cell_size(up) != 2 || (lo & up) != 0)
            continue;
        CubicMixedSimplex s;
        s.cell = c;
        s.i = static_cast<std::size_t>(__builtin_ctzll(lo));
        s.j = static_cast<std::size_t>(63 - __builtin_clzll(lo));
        s.k = static_cast<std::size_t>(__builtin_ctzll(up));
        s.l = static_cast<std::size_t>(63 - __builtin_clzll(up));
        const Cell companions[] = {
            bit(lower(s.i)) | bit(upper(s.k)) | bit(upper(s.l)) | bit(upper(s.i)),
            bit(lower(s.j)) | bit(upper(s.k)) | bit(upper(s.l)) | bit(upper(s.j)),
            bit(lower(s.i)) | bit(lower(s.j)) | bit(lower(s.k)) | bit(upper(s.k)),
            bit(lower(s.i)) | bit(lower(s.j)) | bit(lower(s.l)) | bit(upper(s.l)),
        };
        if (std::all_of(std::begin(companions), std::end(companions), [&](Cell x) { return cells.count(x) != 0; }))
            out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

Circuit circuit_of(const IntVector& dep)
{
    Circuit z;
    for (std::size_t i = 0; i < dep.size(); ++i) {
        if (dep[i] > 0)
            z.positive |= bit(i);
        else if (dep[i] < 0)
            z.negative |= bit(i);
    }
    return z;
}

}  // namespace

CubicModifications PrismContext::circuits(const CubicMixedSimplex& s) const
{
    const Cell z1 = s.cell | bit(lower(s.k));
    const Cell z2 = s.cell | bit(upper(s.i));
    return {circuit_of(triangulations_.spanning_dependence(z1)), circuit_of(triangulations_.spanning_dependence(z2))};
}

IntVector PrismContext::nu_shift(const CubicMixedSimplex& s) const
{
    auto vol = [&](std::size_t p, std::size_t q, std::size_t r) {
        return normalized_volume(std::vector<const IntVector*>{&prism()[p], &prism()[q], &prism()[r]});
    };
    const Int a = vol(lower(s.i), lower(s.j), lower(s.k));
    const Int b = vol(lower(s.i), lower(s.j), lower(s.l));
    const Int c = vol(lower(s.i), upper(s.k), upper(s.l));
    const Int d = vol(lower(s.j), upper(s.k), upper(s.l));
    IntVector shift(base_.size(), 0);
    shift[s.i] = -d;
    shift[s.j] = -c;
    shift[s.k] = b;
    shift[s.l] = a;
    return shift;
}

Triangulation PrismContext::modify(const Triangulation& t, const Circuit& z) const
{
    auto next = triangulations_.try_flip(t, z);
    if (!next)
        throw Error(ErrorCode::UnsupportedFlip, "triangulation is not supported on the circuit");
    return *next;
}

Triangulation vertical_triangulation(const PointConfiguration& base, const Triangulation& t,
                                     const std::vector<std::size_t>& order)
{
    if (base.dim() != 2)
        throw Error(ErrorCode::DimensionUnsupported, "the prism construction needs a planar configuration");
    const std::size_t m = base.size();
    std::vector<std::size_t> rank(m);
    if (order.empty()) {
        for (std::size_t i = 0; i < m; ++i)
            rank[i] = i;
    } else {
        if (order.size() != m)
            throw Error(ErrorCode::InvalidArgument, "order must list every label once");
        std::vector<bool> seen(m, false);
        for (std::size_t pos = 0; pos < m; ++pos) {
            const std::size_t label = order[pos];
            if (label < 1 || label > m || seen[label - 1])
                throw Error(ErrorCode::InvalidArgument, "order must list every label once");
            seen[label - 1] = true;
            rank[label - 1] = pos;
        }
    }
    std::vector<Cell> cells;
    for (auto c : t.cells()) {
        auto v = cell_indices(c);
        if (v.size() != 3)
            throw Error(ErrorCode::InvalidArgument, "base triangulation must consist of triangles");
        std::sort(v.begin(), v.end(), [&](std::size_t a, std::size_t b) { return rank[a] < rank[b]; });
        auto lo = [&](std::size_t i) { return bit(v[i]); };
        auto up = [&](std::size_t i) { return bit(m + v[i]); };
        cells.push_back(lo(0) | lo(1) | lo(2) | up(2));
        cells.push_back(lo(0) | lo(1) | up(1) | up(2));
        cells.push_back(lo(0) | up(0) | up(1) | up(2));
    }
    return Triangulation(std::move(cells));
}

WeightVector nu_vector(const PointConfiguration& base, const Triangulation& prism_triangulation)
{
    return PrismContext(base).nu(prism_triangulation);
}

std::vector<CubicMixedSimplex> find_cubic_mixed(const PointConfiguration& base, const Triangulation& t)
{
    return PrismContext(base).cubic_mixed(t);
}

Triangulation modify_along_circuit(const PointConfiguration& base, const Triangulation& t, const Circuit& z)
{
    return PrismContext(base).modify(t, z);
}

bool h_equivalent(const PointConfiguration& base, const Triangulation& a, const Triangulation& b)
{
    const PrismContext ctx(base);
    return ctx.nu(a) == ctx.nu(b);
}

}  // namespace hurwitz
