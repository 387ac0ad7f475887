#include "hurwitz/geometry.hpp"

#include "hurwitz/combinatorics.hpp"
#include "hurwitz/error.hpp"
#include "hurwitz/linalg.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>

namespace hurwitz {

RationalVector to_rational(const IntVector& v)
{
    RationalVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = Rational(static_cast<long>(v[i]));
    return r;
}

// ---------------------------------------------------------------------------
// PointConfiguration

PointConfiguration::PointConfiguration(std::vector<IntVector> points, std::string name)
    : points_(std::move(points)), name_(std::move(name))
{
    if (points_.empty())
        throw Error(ErrorCode::BadConfig, "configuration has no points");
    dim_ = points_[0].size();
    if (dim_ == 0)
        throw Error(ErrorCode::BadConfig, "points must have dimension >= 1");
    if (points_.size() > max_points)
        throw Error(ErrorCode::BadConfig, "configurations are limited to 64 points");
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (points_[i].size() != dim_)
            throw Error(ErrorCode::BadConfig, "point " + std::to_string(i + 1) + " has mixed dimension");
        for (std::size_t j = 0; j < i; ++j)
            if (points_[i] == points_[j])
                throw Error(ErrorCode::BadConfig, "points " + std::to_string(j + 1) + " and " +
                                                      std::to_string(i + 1) + " coincide");
    }
    std::vector<const IntVector*> ptrs;
    for (const auto& p : points_)
        ptrs.push_back(&p);
    if (points_.size() < dim_ + 1 || affine_dimension(ptrs) != dim_)
        throw Error(ErrorCode::BadConfig, "points do not affinely span their ambient space");
}

std::string PointConfiguration::digest() const
{
    // FNV-1a over a canonical text rendering.
    std::string text = std::to_string(dim_);
    for (const auto& p : points_) {
        text += ';';
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i)
                text += ',';
            text += std::to_string(p[i]);
        }
    }
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// ---------------------------------------------------------------------------
// Volumes

Int normalized_volume(const std::vector<const IntVector*>& simplex)
{
    if (simplex.size() <= 1)
        return simplex.empty() ? 0 : 1;
    const std::size_t k = simplex.size() - 1;
    const std::size_t n = simplex[0]->size();
    if (k > n)
        return 0;
    IntMatrix edges(k, IntVector(n));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j)
            edges[i][j] = checked_sub((*simplex[i + 1])[j], (*simplex[0])[j]);
    if (k == n) {
        Int d = determinant(edges);
        return d < 0 ? -d : d;
    }
    Int g = 0;
    IntMatrix minor(k, IntVector(k));
    for_each_combination(n, k, [&](const std::vector<std::size_t>& cols) {
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                minor[i][j] = edges[i][cols[j]];
        g = abs_gcd(g, determinant(minor));
    });
    return g;
}

Int normalized_volume(const std::vector<IntVector>& simplex)
{
    std::vector<const IntVector*> ptrs;
    for (const auto& p : simplex)
        ptrs.push_back(&p);
    return normalized_volume(ptrs);
}

// ---------------------------------------------------------------------------
// Convex hull

namespace {

struct HullFacet {
    IntVector normal;  // primitive, inner
    Int offset;

    auto operator<=>(const HullFacet&) const = default;
};

std::vector<HullFacet> brute_force_facets(const std::vector<IntVector>& ys, const std::vector<std::size_t>& subset,
                                          std::size_t k)
{
    std::set<HullFacet> found;
    IntMatrix diffs(k - 1, IntVector(k));
    for_each_combination(subset.size(), k, [&](const std::vector<std::size_t>& c) {
        const IntVector& base = ys[subset[c[0]]];
        for (std::size_t i = 1; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                diffs[i - 1][j] = checked_sub(ys[subset[c[i]]][j], base[j]);
        IntVector a = cofactor_normal(diffs);
        if (std::all_of(a.begin(), a.end(), [](Int v) { return v == 0; }))
            return;
        make_primitive(a);
        const Int b = dot(a, base);
        bool pos = false;
        bool neg = false;
        for (std::size_t s : subset) {
            Int v = checked_sub(dot(a, ys[s]), b);
            if (v > 0)
                pos = true;
            else if (v < 0)
                neg = true;
            if (pos && neg)
                return;
        }
        if (neg) {
            for (auto& x : a)
                x = -x;
            found.insert({a, -b});
        } else {
            found.insert({a, b});
        }
    });
    return {found.begin(), found.end()};
}

struct FullHull {
    std::vector<std::size_t> vertices;  // indices into ys
    std::vector<HullFacet> facets;
};

FullHull full_dimensional_hull(const std::vector<IntVector>& ys, std::size_t k)
{
    // Seed with an affinely independent set, then repeatedly add the point
    // most violating each facet until every point is inside.
    std::vector<std::size_t> subset{0};
    {
        std::vector<const IntVector*> chosen{&ys[0]};
        for (std::size_t i = 1; i < ys.size() && subset.size() < k + 1; ++i) {
            chosen.push_back(&ys[i]);
            if (affine_dimension(chosen) == subset.size())
                subset.push_back(i);
            else
                chosen.pop_back();
        }
    }
    std::vector<HullFacet> facets;
    for (;;) {
        facets = brute_force_facets(ys, subset, k);
        std::set<std::size_t> extra;
        for (const auto& f : facets) {
            std::size_t best = ys.size();
            Int best_value = f.offset;
            for (std::size_t i = 0; i < ys.size(); ++i) {
                Int v = dot(f.normal, ys[i]);
                if (v < best_value) {
                    best_value = v;
                    best = i;
                }
            }
            if (best != ys.size())
                extra.insert(best);
        }
        // Drop points that are not vertices of conv(subset).
        std::vector<std::size_t> kept;
        for (std::size_t s : subset) {
            IntMatrix normals;
            for (const auto& f : facets)
                if (dot(f.normal, ys[s]) == f.offset)
                    normals.push_back(f.normal);
            if (rank(normals) == k)
                kept.push_back(s);
        }
        if (extra.empty()) {
            subset = std::move(kept);
            break;
        }
        subset = std::move(kept);
        for (auto e : extra)
            if (std::find(subset.begin(), subset.end(), e) == subset.end())
                subset.push_back(e);
        std::sort(subset.begin(), subset.end());
    }
    return {subset, facets};
}

bool lex_less(const RationalVector& a, const RationalVector& b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Orthogonal projection of u onto the row space of the echelon basis r.
RationalVector project_onto(const RationalMatrix& r, const RationalVector& u)
{
    const std::size_t k = r.size();
    const std::size_t d = u.size();
    // Solve (R R^T) z = R u by elimination on the augmented system.
    RationalMatrix g(k, RationalVector(k + 1));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            Rational s = 0;
            for (std::size_t t = 0; t < d; ++t)
                s += r[i][t] * r[j][t];
            g[i][j] = s;
        }
        Rational s = 0;
        for (std::size_t t = 0; t < d; ++t)
            s += r[i][t] * u[t];
        g[i][k] = s;
    }
    rref(g);
    RationalVector out(d, Rational(0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t t = 0; t < d; ++t)
            out[t] += g[i][k] * r[i][t];
    return out;
}

}  // namespace

LatticePolytope convex_hull(const std::vector<RationalVector>& input)
{
    if (input.empty())
        throw Error(ErrorCode::InvalidArgument, "convex hull of an empty set");
    std::vector<RationalVector> pts = input;
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    LatticePolytope out;
    out.ambient_ = pts[0].size();
    for (const auto& p : pts)
        if (p.size() != out.ambient_)
            throw Error(ErrorCode::InvalidArgument, "points of mixed dimension");

    RationalMatrix diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        RationalVector d(out.ambient_);
        for (std::size_t j = 0; j < out.ambient_; ++j)
            d[j] = pts[i][j] - pts[0][j];
        diffs.push_back(std::move(d));
    }
    std::vector<std::size_t> pivots = rref(diffs);
    out.direction_ = diffs;
    out.dim_ = pivots.size();
    if (out.dim_ == 0) {
        out.vertices_ = {pts[0]};
        return out;
    }

    // Integer coordinates on the pivot columns determine points of the hull.
    Integer lcm = 1;
    for (const auto& p : pts)
        for (auto c : pivots)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), p[c].get_den_mpz_t());
    std::vector<IntVector> ys(pts.size(), IntVector(out.dim_));
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = 0; j < out.dim_; ++j) {
            Rational v = pts[i][pivots[j]] * lcm;
            if (!v.get_num().fits_slong_p())
                throw ArithmeticOverflow();
            ys[i][j] = v.get_num().get_si();
        }
    }
    FullHull hull = full_dimensional_hull(ys, out.dim_);

    std::vector<std::size_t> order = hull.vertices;  // already sorted by index, pts sorted lex
    for (auto i : order)
        out.vertices_.push_back(pts[i]);

    struct Lifted {
        Facet facet;
        std::vector<std::size_t> on;
    };
    std::vector<Lifted> lifted;
    for (const auto& f : hull.facets) {
        RationalVector u(out.ambient_, Rational(0));
        for (std::size_t j = 0; j < out.dim_; ++j)
            u[pivots[j]] = Rational(static_cast<long>(f.normal[j]));
        IntVector normal = primitive_integer(project_onto(out.direction_, u));
        std::vector<std::size_t> on;
        for (std::size_t v = 0; v < order.size(); ++v)
            if (dot(f.normal, ys[order[v]]) == f.offset)
                on.push_back(v);
        Rational offset = 0;
        for (std::size_t t = 0; t < out.ambient_; ++t)
            offset += Rational(static_cast<long>(normal[t])) * out.vertices_[on.front()][t];
        lifted.push_back({{std::move(normal), offset}, std::move(on)});
    }
    std::sort(lifted.begin(), lifted.end(), [](const Lifted& a, const Lifted& b) {
        if (a.facet.normal != b.facet.normal)
            return a.facet.normal < b.facet.normal;
        return a.facet.offset < b.facet.offset;
    });
    for (auto& l : lifted) {
        out.facets_.push_back(std::move(l.facet));
        out.incidence_.push_back(std::move(l.on));
    }
    return out;
}

LatticePolytope convex_hull(const std::vector<IntVector>& points)
{
    std::vector<RationalVector> r;
    r.reserve(points.size());
    for (const auto& p : points)
        r.push_back(to_rational(p));
    return convex_hull(r);
}

bool LatticePolytope::has_lattice_vertices() const
{
    for (const auto& v : vertices_)
        for (const auto& c : v)
            if (c.get_den() != 1)
                return false;
    return true;
}

bool LatticePolytope::contains(const RationalVector& x) const
{
    if (x.size() != ambient_)
        return false;
    const auto& v0 = vertices_.front();
    RationalVector d(ambient_);
    for (std::size_t i = 0; i < ambient_; ++i)
        d[i] = x[i] - v0[i];
    // d lies in the direction space iff it equals its reconstruction from
    // the pivot coordinates of the echelon basis.
    RationalVector rebuilt(ambient_, Rational(0));
    for (const auto& row : direction_) {
        auto pivot = static_cast<std::size_t>(
            std::find_if(row.begin(), row.end(), [](const Rational& q) { return q != 0; }) - row.begin());
        for (std::size_t t = 0; t < ambient_; ++t)
            rebuilt[t] += d[pivot] * row[t];
    }
    if (rebuilt != d)
        return false;
    for (const auto& f : facets_) {
        Rational s = 0;
        for (std::size_t t = 0; t < ambient_; ++t)
            s += Rational(static_cast<long>(f.normal[t])) * x[t];
        if (s < f.offset)
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Faces

namespace {

std::size_t face_dimension(const LatticePolytope& p, const std::vector<std::size_t>& verts)
{
    if (verts.size() <= 1)
        return 0;
    RationalMatrix diffs;
    const auto& base = p.vertices()[verts[0]];
    for (std::size_t i = 1; i < verts.size(); ++i) {
        RationalVector d(p.ambient_dim());
        for (std::size_t t = 0; t < d.size(); ++t)
            d[t] = p.vertices()[verts[i]][t] - base[t];
        diffs.push_back(std::move(d));
    }
    return rref(diffs).size();
}

}  // namespace

std::vector<Face> faces(const LatticePolytope& polytope, std::size_t k)
{
    if (k > polytope.dim())
        throw Error(ErrorCode::InvalidArgument, "face dimension exceeds polytope dimension");
    std::vector<Face> out;
    if (k == polytope.dim()) {
        Face whole;
        for (std::size_t i = 0; i < polytope.vertices().size(); ++i)
            whole.vertices.push_back(i);
        whole.dim = k;
        out.push_back(std::move(whole));
        return out;
    }
    const auto& inc = polytope.incidence();
    std::set<std::vector<std::size_t>> seen(inc.begin(), inc.end());
    std::vector<std::vector<std::size_t>> queue(inc.begin(), inc.end());
    for (std::size_t q = 0; q < queue.size(); ++q) {
        for (const auto& g : inc) {
            std::vector<std::size_t> meet;
            std::set_intersection(queue[q].begin(), queue[q].end(), g.begin(), g.end(), std::back_inserter(meet));
            if (meet.empty() || meet.size() == queue[q].size())
                continue;
            if (seen.insert(meet).second)
                queue.push_back(meet);
        }
    }
    for (const auto& verts : seen) {
        std::size_t d = face_dimension(polytope, verts);
        if (d != k)
            continue;
        Face f;
        f.vertices = verts;
        f.dim = d;
        for (std::size_t i = 0; i < inc.size(); ++i)
            if (std::includes(inc[i].begin(), inc[i].end(), verts.begin(), verts.end()))
                f.facets.push_back(i);
        out.push_back(std::move(f));
    }
    return out;
}

Int boundary_volume(const LatticePolytope& polygon)
{
    if (polygon.dim() != 2)
        throw Error(ErrorCode::InvalidArgument, "boundary volume needs a polygon");
    if (!polygon.has_lattice_vertices())
        throw Error(ErrorCode::InvalidArgument, "boundary volume needs lattice vertices");
    Int total = 0;
    for (const auto& e : faces(polygon, 1)) {
        const auto& a = polygon.vertices()[e.vertices[0]];
        const auto& b = polygon.vertices()[e.vertices[1]];
        Int g = 0;
        for (std::size_t t = 0; t < a.size(); ++t) {
            Rational d = b[t] - a[t];
            g = abs_gcd(g, d.get_num().get_si());
        }
        total += g;
    }
    return total;
}

namespace {

void fan_recurse(const std::vector<RationalVector>& all, std::vector<std::size_t> subset,
                 std::vector<std::size_t>& prefix, std::vector<std::vector<std::size_t>>& out)
{
    std::vector<RationalVector> pts;
    for (auto i : subset)
        pts.push_back(all[i]);
    LatticePolytope hull = convex_hull(pts);
    auto index_of = [&](const RationalVector& v) {
        return static_cast<std::size_t>(std::find(all.begin(), all.end(), v) - all.begin());
    };
    if (hull.dim() == 0) {
        prefix.push_back(index_of(hull.vertices()[0]));
        out.push_back(prefix);
        std::sort(out.back().begin(), out.back().end());
        prefix.pop_back();
        return;
    }
    std::vector<std::size_t> verts;
    for (const auto& v : hull.vertices())
        verts.push_back(index_of(v));
    const std::size_t apex_local = static_cast<std::size_t>(std::min_element(verts.begin(), verts.end()) - verts.begin());
    prefix.push_back(verts[apex_local]);
    for (const auto& on : hull.incidence()) {
        if (std::find(on.begin(), on.end(), apex_local) != on.end())
            continue;
        std::vector<std::size_t> sub;
        for (auto v : on)
            sub.push_back(verts[v]);
        fan_recurse(all, sub, prefix, out);
    }
    prefix.pop_back();
}

}  // namespace

std::vector<std::vector<std::size_t>> fan_triangulation(const LatticePolytope& polytope)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> all(polytope.vertices().size());
    for (std::size_t i = 0; i < all.size(); ++i)
        all[i] = i;
    std::vector<std::size_t> prefix;
    fan_recurse(polytope.vertices(), all, prefix, out);
    std::sort(out.begin(), out.end());
    return out;
}

Int lattice_volume(const LatticePolytope& polytope)
{
    if (polytope.dim() != polytope.ambient_dim())
        throw Error(ErrorCode::InvalidArgument, "lattice volume needs a full-dimensional polytope");
    if (!polytope.has_lattice_vertices())
        throw Error(ErrorCode::InvalidArgument, "lattice volume needs lattice vertices");
    std::vector<IntVector> verts;
    for (const auto& v : polytope.vertices()) {
        IntVector iv;
        for (const auto& c : v)
            iv.push_back(c.get_num().get_si());
        verts.push_back(std::move(iv));
    }
    Int total = 0;
    for (const auto& s : fan_triangulation(polytope)) {
        std::vector<const IntVector*> simplex;
        for (auto i : s)
            simplex.push_back(&verts[i]);
        total = checked_add(total, normalized_volume(simplex));
    }
    return total;
}

// ---------------------------------------------------------------------------
// Normal fans

NormalFan normal_fan(const LatticePolytope& polytope)
{
    if (polytope.dim() == 0)
        throw Error(ErrorCode::InvalidArgument, "normal fan of a point");
    NormalFan fan;
    fan.direction = polytope.direction_basis();
    std::vector<std::vector<IntVector>> cones(polytope.vertices().size());
    for (std::size_t f = 0; f < polytope.facets().size(); ++f)
        for (auto v : polytope.incidence()[f])
            cones[v].push_back(polytope.facets()[f].normal);
    for (auto& c : cones)
        std::sort(c.begin(), c.end());
    std::sort(cones.begin(), cones.end());
    fan.cones = std::move(cones);
    return fan;
}

bool normally_equivalent(const LatticePolytope& a, const LatticePolytope& b)
{
    if (a.ambient_dim() != b.ambient_dim())
        return false;
    if (a.dim() == 0 || b.dim() == 0)
        return a.dim() == b.dim();
    if (a.direction_basis() != b.direction_basis())
        return false;
    return normal_fan(a).cones == normal_fan(b).cones;
}

}  // namespace hurwitz
