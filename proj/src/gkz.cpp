#include "hurwitz/gkz.hpp"

#include "hurwitz/combinatorics.hpp"
#include "hurwitz/error.hpp"

#include <algorithm>

namespace hurwitz {

std::string_view to_string(WeightKind kind)
{
    switch (kind) {
    case WeightKind::Eta: return "eta";
    case WeightKind::Gkz: return "gkz";
    case WeightKind::Massive: return "massive";
    case WeightKind::Hurwitz: return "hurwitz";
    case WeightKind::Nu: return "nu";
    }
    return "unknown";
}

namespace {

Int simplex_volume(const PointConfiguration& config, Cell c)
{
    std::vector<const IntVector*> pts;
    for (auto i : cell_indices(c))
        pts.push_back(&config[i]);
    return normalized_volume(pts);
}

}  // namespace

WeightCalculator::WeightCalculator(const PointConfiguration& config) : config_(config)
{
    const std::size_t n = config_.dim();
    const LatticePolytope hull = convex_hull(config_.points());
    face_points_.resize(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        for (const auto& face : faces(hull, k)) {
            Cell mask = 0;
            for (std::size_t i = 0; i < config_.size(); ++i) {
                const RationalVector p = to_rational(config_[i]);
                bool on = true;
                for (auto f : face.facets) {
                    const auto& facet = hull.facets()[f];
                    Rational s = 0;
                    for (std::size_t t = 0; t < p.size(); ++t)
                        s += Rational(static_cast<long>(facet.normal[t])) * p[t];
                    if (s != facet.offset) {
                        on = false;
                        break;
                    }
                }
                if (on)
                    mask |= bit(i);
            }
            face_points_[k].push_back(mask);
        }
        std::sort(face_points_[k].begin(), face_points_[k].end());
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (Cell face : face_points_[k]) {
            const auto pts = cell_indices(face);
            for_each_combination(pts.size(), k + 1, [&](const std::vector<std::size_t>& c) {
                Cell s = 0;
                for (auto i : c)
                    s |= bit(pts[i]);
                if (massive_volume_.count(s))
                    return;
                const Int v = simplex_volume(config_, s);
                if (v != 0)
                    massive_volume_.emplace(s, v);
            });
        }
    }
}

bool WeightCalculator::is_massive(Cell simplex) const
{
    const auto k = static_cast<std::size_t>(cell_size(simplex)) - 1;
    if (k >= config_.dim())
        return k == config_.dim();
    return massive_volume_.count(simplex) != 0;
}

WeightVector WeightCalculator::eta(const Triangulation& t, std::size_t k) const
{
    const std::size_t n = config_.dim();
    if (k > n)
        throw Error(ErrorCode::InvalidArgument, "eta_k needs 0 <= k <= n");
    WeightVector out{IntVector(config_.size(), 0), k == n ? WeightKind::Gkz : WeightKind::Eta};
    auto add = [&](Cell s, Int v) {
        for (Cell r = s; r; r &= r - 1)
            out.values[static_cast<std::size_t>(__builtin_ctzll(r))] += v;
    };
    if (k == n) {
        for (auto c : t.cells())
            add(c, simplex_volume(config_, c));
        return out;
    }
    std::vector<Cell> faces;
    for (auto c : t.cells()) {
        const auto idx = cell_indices(c);
        for_each_combination(idx.size(), k + 1, [&](const std::vector<std::size_t>& sub) {
            Cell s = 0;
            for (auto i : sub)
                s |= bit(idx[i]);
            faces.push_back(s);
        });
    }
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    for (auto s : faces) {
        auto it = massive_volume_.find(s);
        if (it != massive_volume_.end())
            add(s, it->second);
    }
    return out;
}

WeightVector WeightCalculator::gkz(const Triangulation& t) const
{
    return eta(t, config_.dim());
}

WeightVector WeightCalculator::massive_gkz(const Triangulation& t) const
{
    const std::size_t n = config_.dim();
    WeightVector out{IntVector(config_.size(), 0), WeightKind::Massive};
    for (std::size_t k = 0; k <= n; ++k) {
        const Int sign = ((n - k) % 2 == 0) ? 1 : -1;
        const auto e = eta(t, k);
        for (std::size_t i = 0; i < out.values.size(); ++i)
            out.values[i] += sign * e.values[i];
    }
    return out;
}

WeightVector WeightCalculator::hurwitz(const Triangulation& t) const
{
    const std::size_t n = config_.dim();
    const auto top = eta(t, n);
    const auto next = eta(t, n - 1);
    WeightVector out{IntVector(config_.size(), 0), WeightKind::Hurwitz};
    for (std::size_t i = 0; i < out.values.size(); ++i)
        out.values[i] = static_cast<Int>(n) * top.values[i] - next.values[i];
    return out;
}

bool is_massive(const PointConfiguration& config, Cell simplex)
{
    return WeightCalculator(config).is_massive(simplex);
}

WeightVector eta_k(const PointConfiguration& config, const Triangulation& t, std::size_t k)
{
    return WeightCalculator(config).eta(t, k);
}

WeightVector gkz_vector(const PointConfiguration& config, const Triangulation& t)
{
    return WeightCalculator(config).gkz(t);
}

WeightVector massive_gkz(const PointConfiguration& config, const Triangulation& t)
{
    return WeightCalculator(config).massive_gkz(t);
}

WeightVector hurwitz_vector(const PointConfiguration& config, const Triangulation& t)
{
    return WeightCalculator(config).hurwitz(t);
}

}  // namespace hurwitz
