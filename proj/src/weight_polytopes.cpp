#include "hurwitz/weight_polytopes.hpp"

#include "hurwitz/error.hpp"

#include <algorithm>
#include <set>

namespace hurwitz {

std::string_view to_string(PolytopeKind kind)
{
    switch (kind) {
    case PolytopeKind::Chow: return "chow";
    case PolytopeKind::HurwitzCandidate: return "hurwitz-candidate";
    case PolytopeKind::PrismHurwitz: return "prism-hurwitz";
    }
    return "unknown";
}

namespace {

IntVector to_integer(const RationalVector& v)
{
    IntVector out;
    out.reserve(v.size());
    for (const auto& c : v) {
        if (c.get_den() != 1 || !c.get_num().fits_slong_p())
            throw Error(ErrorCode::InvalidArgument, "vertex is not an integer point");
        out.push_back(c.get_num().get_si());
    }
    return out;
}

EnumerationOptions without_checkpoint(EnumerationOptions options)
{
    options.checkpoint.clear();
    options.stop_after = 0;
    return options;
}

void require_complete(const EnumerationResult& r)
{
    if (!r.complete)
        throw Error(ErrorCode::InvalidArgument, "enumeration stopped before completion");
}

std::vector<std::pair<IntVector, std::string>> base_vectors(const PointConfiguration& config,
                                                            const EnumerationOptions& options, bool hurwitz,
                                                            std::size_t* count = nullptr)
{
    const TriangulationContext ctx(config);
    const auto r = enumerate_regular(ctx, without_checkpoint(options));
    require_complete(r);
    const WeightCalculator w(config);
    std::vector<std::pair<IntVector, std::string>> out;
    for (const auto& t : r.triangulations)
        out.emplace_back(hurwitz ? w.hurwitz(t).values : w.gkz(t).values, t.encode());
    if (count)
        *count = r.triangulations.size();
    return out;
}

std::vector<std::pair<IntVector, std::string>> prism_vectors(const PointConfiguration& config,
                                                             const EnumerationOptions& options)
{
    const PrismContext ctx(config);
    const auto r = enumerate_regular(ctx.triangulations(), options);
    require_complete(r);
    std::vector<std::pair<IntVector, std::string>> out;
    out.reserve(r.triangulations.size());
    for (const auto& t : r.triangulations)
        out.emplace_back(ctx.nu(t).values, t.encode());
    return out;
}

std::vector<std::vector<IntVector>> vertex_cones(const LatticePolytope& p)
{
    std::vector<std::vector<IntVector>> cones(p.vertices().size());
    for (std::size_t f = 0; f < p.facets().size(); ++f)
        for (auto v : p.incidence()[f])
            cones[v].push_back(p.facets()[f].normal);
    for (auto& c : cones)
        std::sort(c.begin(), c.end());
    return cones;
}

}  // namespace

WeightPolytope assemble_polytope(PolytopeKind kind, const std::vector<std::pair<IntVector, std::string>>& items)
{
    if (items.empty())
        throw Error(ErrorCode::InvalidArgument, "weight polytope needs at least one vector");
    WeightPolytope out;
    out.kind = kind;
    out.triangulations = items.size();
    for (const auto& item : items)
        out.generators.push_back(item.first);
    std::sort(out.generators.begin(), out.generators.end());
    out.generators.erase(std::unique(out.generators.begin(), out.generators.end()), out.generators.end());
    out.polytope = convex_hull(out.generators);
    for (const auto& v : out.polytope.vertices())
        out.vertices.push_back(to_integer(v));
    std::sort(out.vertices.begin(), out.vertices.end());
    const std::set<IntVector> vertex_set(out.vertices.begin(), out.vertices.end());
    for (const auto& [v, enc] : items)
        if (vertex_set.count(v))
            out.sources[v].push_back(enc);
    for (auto& [v, encs] : out.sources)
        std::sort(encs.begin(), encs.end());
    return out;
}

WeightPolytope secondary_polytope(const PointConfiguration& config, const EnumerationOptions& options)
{
    return assemble_polytope(PolytopeKind::Chow, base_vectors(config, options, false));
}

WeightPolytope hurwitz_candidate_polytope(const PointConfiguration& config, const EnumerationOptions& options)
{
    if (config.dim() != 2)
        throw Error(ErrorCode::DimensionUnsupported, "Hurwitz-candidate polytopes are built for planar configurations");
    return assemble_polytope(PolytopeKind::HurwitzCandidate, base_vectors(config, options, true));
}

WeightPolytope prism_hurwitz_polytope(const PointConfiguration& config, const EnumerationOptions& options)
{
    return assemble_polytope(PolytopeKind::PrismHurwitz, prism_vectors(config, options));
}

Int degree_from_polytope(const WeightPolytope& polytope, Int k)
{
    if (k <= 0)
        throw Error(ErrorCode::InvalidArgument, "degree divisor must be positive");
    if (polytope.generators.empty())
        throw Error(ErrorCode::InvalidArgument, "empty weight polytope");
    auto sum = [](const IntVector& v) {
        Int s = 0;
        for (auto x : v)
            s = checked_add(s, x);
        return s;
    };
    const Int s = sum(polytope.generators.front());
    for (const auto& g : polytope.generators)
        if (sum(g) != s)
            throw Error(ErrorCode::NonconstantSum, "weight vectors have different coordinate sums");
    if (s % k != 0)
        throw Error(ErrorCode::InvalidArgument,
                    "coordinate sum " + std::to_string(s) + " is not divisible by " + std::to_string(k));
    return s / k;
}

Int boundary_lattice_volume(const LatticePolytope& q)
{
    if (q.dim() != q.ambient_dim() || q.dim() == 0)
        throw Error(ErrorCode::InvalidArgument, "boundary volume needs a full-dimensional polytope");
    if (!q.has_lattice_vertices())
        throw Error(ErrorCode::InvalidArgument, "boundary volume needs lattice vertices");
    if (q.dim() == 1)
        return 2;
    Int total = 0;
    for (const auto& facet : faces(q, q.dim() - 1)) {
        std::vector<IntVector> verts;
        for (auto v : facet.vertices)
            verts.push_back(to_integer(q.vertices()[v]));
        const LatticePolytope f = convex_hull(verts);
        std::vector<IntVector> fv;
        for (const auto& v : f.vertices())
            fv.push_back(to_integer(v));
        for (const auto& s : fan_triangulation(f)) {
            std::vector<const IntVector*> simplex;
            for (auto i : s)
                simplex.push_back(&fv[i]);
            total = checked_add(total, normalized_volume(simplex));
        }
    }
    return total;
}

Int hurwitz_degree_formula(const LatticePolytope& q)
{
    const Int n = static_cast<Int>(q.dim());
    return checked_sub(checked_mul(n + 1, lattice_volume(q)), boundary_lattice_volume(q));
}

IntVector project_pi(const IntVector& v)
{
    if (v.empty())
        throw Error(ErrorCode::InvalidArgument, "cannot project an empty vector");
    IntVector out(v.size() - 1);
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        out[i] = checked_sub(v[i], v.back());
    return out;
}

bool inclusion(const LatticePolytope& inner, const LatticePolytope& outer)
{
    if (inner.ambient_dim() != outer.ambient_dim())
        return false;
    return std::all_of(inner.vertices().begin(), inner.vertices().end(),
                       [&](const RationalVector& v) { return outer.contains(v); });
}

VertexEdgeCorrespondence vertex_edge_correspondence(const LatticePolytope& a, const LatticePolytope& b)
{
    VertexEdgeCorrespondence out;
    out.vertices_a = a.vertices().size();
    out.vertices_b = b.vertices().size();
    if (a.dim() == 0 || b.dim() == 0 || a.ambient_dim() != b.ambient_dim())
        return out;
    const auto edges_a = faces(a, 1);
    const auto edges_b = faces(b, 1);
    out.edges_a = edges_a.size();
    out.edges_b = edges_b.size();

    const auto cones_a = vertex_cones(a);
    const auto cones_b = vertex_cones(b);
    std::map<std::vector<IntVector>, std::size_t> by_cone;
    for (std::size_t v = 0; v < cones_b.size(); ++v)
        by_cone.emplace(cones_b[v], v);
    std::vector<std::optional<std::size_t>> match(cones_a.size());
    for (std::size_t v = 0; v < cones_a.size(); ++v) {
        auto it = by_cone.find(cones_a[v]);
        if (it != by_cone.end()) {
            match[v] = it->second;
            ++out.matched_vertices;
        }
    }
    std::set<std::pair<std::size_t, std::size_t>> b_edges;
    for (const auto& e : edges_b)
        b_edges.emplace(std::min(e.vertices[0], e.vertices[1]), std::max(e.vertices[0], e.vertices[1]));
    for (const auto& e : edges_a) {
        const auto u = e.vertices[0];
        const auto w = e.vertices[1];
        if (!match[u] || !match[w])
            continue;
        const auto bu = *match[u];
        const auto bw = *match[w];
        if (!b_edges.count({std::min(bu, bw), std::max(bu, bw)}))
            continue;
        RationalVector da(a.ambient_dim());
        RationalVector db(b.ambient_dim());
        for (std::size_t t = 0; t < da.size(); ++t) {
            da[t] = a.vertices()[w][t] - a.vertices()[u][t];
            db[t] = b.vertices()[bw][t] - b.vertices()[bu][t];
        }
        std::optional<Rational> ratio;
        bool parallel = true;
        for (std::size_t t = 0; t < da.size() && parallel; ++t) {
            if (da[t] == 0 || db[t] == 0) {
                parallel = da[t] == db[t];
                continue;
            }
            const Rational r = db[t] / da[t];
            if (r <= 0 || (ratio && *ratio != r))
                parallel = false;
            ratio = r;
        }
        if (parallel)
            ++out.parallel_edges;
    }
    return out;
}

ConjectureReport check_conjecture(const PointConfiguration& config, const EnumerationOptions& options)
{
    ConjectureReport report;
    report.name = config.name();
    const auto chow = secondary_polytope(config, options);
    const auto xi = hurwitz_candidate_polytope(config, options);
    const auto nu = prism_hurwitz_polytope(config, options);
    report.triangulations = chow.triangulations;
    report.prism_triangulations = nu.triangulations;
    report.hurwitz_vertices = nu.vertices.size();
    report.normally_equivalent = normally_equivalent(xi.polytope, chow.polytope);
    report.vertices_match = nu.vertices == xi.vertices;
    report.xi_in_nu_hull = std::all_of(xi.generators.begin(), xi.generators.end(),
                                       [&](const IntVector& v) { return nu.polytope.contains(to_rational(v)); });
    return report;
}

SemistabilityReport k_semistable(const PointConfiguration& config, const EnumerationOptions& options)
{
    SemistabilityReport report;
    const auto chow = secondary_polytope(config, options);
    const auto xi = hurwitz_candidate_polytope(config, options);
    report.chow_degree = degree_from_polytope(chow, static_cast<Int>(config.dim()) + 1);
    report.hurwitz_degree = degree_from_polytope(xi, static_cast<Int>(config.dim()));
    auto scaled = [](const std::vector<IntVector>& vs, Int s) {
        std::vector<IntVector> out;
        for (const auto& v : vs) {
            auto p = project_pi(v);
            for (auto& x : p)
                x = checked_mul(x, s);
            out.push_back(std::move(p));
        }
        return out;
    };
    const auto inner = convex_hull(scaled(chow.vertices, report.hurwitz_degree));
    const auto outer = convex_hull(scaled(xi.vertices, report.chow_degree));
    report.semistable = inclusion(inner, outer);
    return report;
}

}  // namespace hurwitz
