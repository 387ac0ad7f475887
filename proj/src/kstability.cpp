#include "hurwitz/kstability.hpp"

#include "hurwitz/combinatorics.hpp"
#include "hurwitz/error.hpp"
#include "hurwitz/gkz.hpp"
#include "hurwitz/weight_polytopes.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>

namespace hurwitz {

PLFunction PLFunction::from_heights(RationalVector heights)
{
    if (heights.empty())
        throw Error(ErrorCode::InvalidArgument, "height function needs at least one value");
    for (auto& h : heights)
        h.canonicalize();
    PLFunction f;
    f.heights_ = std::move(heights);
    return f;
}

PLFunction PLFunction::from_affine(std::vector<AffinePiece> pieces)
{
    if (pieces.empty())
        throw Error(ErrorCode::InvalidArgument, "affine-max function needs at least one piece");
    for (const auto& p : pieces)
        if (p.slope.size() != pieces.front().slope.size() || p.slope.empty())
            throw Error(ErrorCode::InvalidArgument, "affine pieces must share a positive dimension");
    for (auto& p : pieces) {
        for (auto& s : p.slope)
            s.canonicalize();
        p.constant.canonicalize();
    }
    PLFunction f;
    f.pieces_ = std::move(pieces);
    return f;
}

PLFunction PLFunction::scaled(const Rational& lambda) const
{
    if (lambda < 0)
        throw Error(ErrorCode::InvalidArgument, "negative multiples of a convex function are not convex");
    Rational l = lambda;
    l.canonicalize();
    PLFunction f = *this;
    for (auto& h : f.heights_)
        h *= l;
    for (auto& p : f.pieces_) {
        for (auto& s : p.slope)
            s *= l;
        p.constant *= l;
    }
    return f;
}

PLFunction PLFunction::shifted(const Rational& c) const
{
    Rational d = c;
    d.canonicalize();
    PLFunction f = *this;
    for (auto& h : f.heights_)
        h += d;
    for (auto& p : f.pieces_)
        p.constant += d;
    return f;
}

Rational PLFunction::operator()(const RationalVector& x) const
{
    if (has_heights())
        throw Error(ErrorCode::InvalidArgument, "height functions are evaluated through a triangulation");
    std::optional<Rational> best;
    for (const auto& p : pieces_) {
        if (p.slope.size() != x.size())
            throw Error(ErrorCode::InvalidArgument, "point dimension does not match the affine pieces");
        Rational v = p.constant;
        for (std::size_t i = 0; i < x.size(); ++i)
            v += p.slope[i] * x[i];
        if (!best || v > *best)
            best = v;
    }
    return *best;
}

namespace {

/// Solution of [p_i, 1] . (g, c) = v_i for the vertices of a simplex.
struct Interpolant {
    RationalVector slope;
    Rational constant;

    Rational operator()(const IntVector& x) const
    {
        Rational v = constant;
        for (std::size_t i = 0; i < x.size(); ++i)
            v += slope[i] * Rational(static_cast<long>(x[i]));
        return v;
    }
};

Interpolant interpolate(const PointConfiguration& config, Cell cell, const RationalVector& values)
{
    const std::size_t n = config.dim();
    RationalMatrix m;
    for (auto i : cell_indices(cell)) {
        RationalVector row;
        for (auto x : config[i])
            row.emplace_back(static_cast<long>(x));
        row.emplace_back(1);
        row.push_back(values[i]);
        m.push_back(std::move(row));
    }
    const auto pivots = rref(m);
    if (pivots.size() != n + 1 || pivots.back() != n)
        throw Error(ErrorCode::DegenerateSimplex, "cannot interpolate over a degenerate simplex");
    Interpolant out;
    for (std::size_t r = 0; r < n; ++r)
        out.slope.push_back(m[r][n + 1]);
    out.constant = m[n][n + 1];
    return out;
}

/// Barycentric coordinates of x with respect to the simplex, or nullopt when
/// x lies outside it.
std::optional<RationalVector> barycentric(const PointConfiguration& config, Cell cell, const IntVector& x)
{
    const auto idx = cell_indices(cell);
    const std::size_t n = config.dim();
    RationalMatrix m(n + 1, RationalVector(idx.size() + 1));
    for (std::size_t j = 0; j < idx.size(); ++j) {
        for (std::size_t r = 0; r < n; ++r)
            m[r][j] = Rational(static_cast<long>(config[idx[j]][r]));
        m[n][j] = 1;
    }
    for (std::size_t r = 0; r < n; ++r)
        m[r][idx.size()] = Rational(static_cast<long>(x[r]));
    m[n][idx.size()] = 1;
    rref(m);
    RationalVector lambda(idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j) {
        lambda[j] = m[j][idx.size()];
        if (lambda[j] < 0)
            return std::nullopt;
    }
    return lambda;
}

void check_values(const PointConfiguration& config, const RationalVector& values)
{
    if (values.size() != config.size())
        throw Error(ErrorCode::InvalidArgument, "need one value per configuration point");
}

void check_linear(const PointConfiguration& config, const RationalVector& values, const Triangulation& t)
{
    for (auto c : t.cells()) {
        if (static_cast<std::size_t>(cell_size(c)) != config.dim() + 1)
            throw Error(ErrorCode::InvalidArgument, "cells must be full-dimensional simplices");
        const auto ell = interpolate(config, c, values);
        for (std::size_t i = 0; i < config.size(); ++i) {
            if (c & bit(i))
                continue;
            if (barycentric(config, c, config[i]) && ell(config[i]) != values[i])
                throw Error(ErrorCode::LinearityViolation,
                            "function is not affine on cell containing point " + std::to_string(i + 1));
        }
    }
}

Rational factorial(std::size_t k)
{
    Rational f = 1;
    for (std::size_t i = 2; i <= k; ++i)
        f *= Rational(static_cast<long>(i));
    return f;
}

std::vector<RationalVector> placing_levels(const RationalVector& heights)
{
    std::vector<RationalVector> levels{heights};
    for (std::size_t j = heights.size(); j-- > 0;) {
        RationalVector e(heights.size(), Rational(0));
        e[j] = 1;
        levels.push_back(std::move(e));
    }
    return levels;
}

Triangulation lower_triangulation(const PointConfiguration& config, const RationalVector& heights)
{
    auto t = lower_hull_triangulation(config, placing_levels(heights));
    if (!t)
        throw std::logic_error("placing refinement must be a triangulation");
    return *t;
}

/// Values of the lower hull of the heights at every point.
RationalVector envelope_values(const PointConfiguration& config, const RationalVector& heights, const Triangulation& t)
{
    RationalVector out = heights;
    const Cell used = t.used_points();
    for (std::size_t i = 0; i < config.size(); ++i) {
        if (used & bit(i))
            continue;
        for (auto c : t.cells()) {
            if (!barycentric(config, c, config[i]))
                continue;
            out[i] = interpolate(config, c, heights)(config[i]);
            break;
        }
    }
    return out;
}

Int lcm(Int a, Int b)
{
    return checked_mul(a / abs_gcd(a, b), b);
}

/// Minimal k such that every vertex of every linearity domain of f is in
/// (1/k) Z^n.
Int minimal_dilation(const PLFunction& f, const LatticePolytope& q)
{
    const std::size_t n = q.ambient_dim();
    struct Plane {
        RationalVector normal;
        Rational offset;
        std::optional<std::pair<std::size_t, std::size_t>> pieces;
    };
    std::vector<Plane> planes;
    for (const auto& facet : q.facets())
        planes.push_back({to_rational(facet.normal), facet.offset, std::nullopt});
    const auto& ps = f.pieces();
    for (std::size_t j = 0; j < ps.size(); ++j)
        for (std::size_t l = j + 1; l < ps.size(); ++l) {
            RationalVector d(n);
            bool zero = true;
            for (std::size_t t = 0; t < n; ++t) {
                d[t] = ps[j].slope[t] - ps[l].slope[t];
                zero = zero && d[t] == 0;
            }
            if (!zero)
                planes.push_back({d, ps[l].constant - ps[j].constant, std::pair{j, l}});
        }
    Int k = 1;
    for_each_combination(planes.size(), n, [&](const std::vector<std::size_t>& chosen) {
        RationalMatrix m;
        for (auto c : chosen) {
            RationalVector row = planes[c].normal;
            row.push_back(planes[c].offset);
            m.push_back(std::move(row));
        }
        const auto pivots = rref(m);
        if (pivots.size() != n || pivots.back() != n - 1)
            return;
        RationalVector x(n);
        for (std::size_t r = 0; r < n; ++r)
            x[r] = m[r][n];
        if (!q.contains(x))
            return;
        const Rational fx = f(x);
        for (auto c : chosen) {
            if (!planes[c].pieces)
                continue;
            const auto& pj = ps[planes[c].pieces->first];
            Rational v = pj.constant;
            for (std::size_t t = 0; t < n; ++t)
                v += pj.slope[t] * x[t];
            if (v != fx)
                return;
        }
        for (const auto& c : x)
            k = lcm(k, c.get_den().get_si());
    });
    return k;
}

Rational pairing_value(const InducedTriangulation& induced, const Triangulation& t)
{
    const auto& config = induced.config;
    const std::size_t n = config.dim();
    const auto hull = convex_hull(config.points());
    const Int vol = lattice_volume(hull);
    const Int vol_boundary = boundary_lattice_volume(hull);
    const Int deg_hurwitz = static_cast<Int>(n + 1) * vol - vol_boundary;
    const WeightCalculator w(config);
    const auto eta = w.gkz(t).values;
    const auto xi = w.hurwitz(t).values;
    Rational sum = 0;
    for (std::size_t i = 0; i < config.size(); ++i) {
        const Int coefficient = static_cast<Int>(n) * deg_hurwitz * eta[i] - static_cast<Int>(n + 1) * vol * xi[i];
        sum += induced.values[i] * Rational(static_cast<long>(coefficient));
    }
    Rational l = sum / (factorial(n + 1) * Rational(static_cast<long>(vol)));
    for (std::size_t i = 1; i < n; ++i)
        l /= Rational(static_cast<long>(induced.dilation));
    return l;
}

}  // namespace

std::vector<IntVector> lattice_points(const LatticePolytope& q)
{
    const std::size_t n = q.ambient_dim();
    if (q.vertices().empty())
        return {};
    IntVector lo(n), hi(n);
    for (std::size_t t = 0; t < n; ++t) {
        Rational a = q.vertices()[0][t], b = a;
        for (const auto& v : q.vertices()) {
            a = std::min(a, v[t]);
            b = std::max(b, v[t]);
        }
        mpz_class fl, ce;
        mpz_fdiv_q(fl.get_mpz_t(), a.get_num().get_mpz_t(), a.get_den().get_mpz_t());
        mpz_cdiv_q(ce.get_mpz_t(), b.get_num().get_mpz_t(), b.get_den().get_mpz_t());
        lo[t] = fl.get_si();
        hi[t] = ce.get_si();
    }
    std::vector<IntVector> out;
    IntVector x = lo;
    for (;;) {
        if (q.contains(to_rational(x)))
            out.push_back(x);
        std::size_t t = n;
        while (t-- > 0) {
            if (x[t] < hi[t]) {
                ++x[t];
                break;
            }
            x[t] = lo[t];
        }
        if (t == static_cast<std::size_t>(-1))
            break;
    }
    return out;
}

RationalVector convex_envelope(const PointConfiguration& config, const RationalVector& heights)
{
    check_values(config, heights);
    return envelope_values(config, heights, lower_triangulation(config, heights));
}

InducedTriangulation induced_triangulation(const PLFunction& f, const PointConfiguration& config)
{
    InducedTriangulation out;
    if (f.has_heights()) {
        check_values(config, f.heights());
        out.config = config;
        out.values = f.heights();
        out.triangulation = lower_triangulation(config, f.heights());
        const auto env = envelope_values(config, f.heights(), out.triangulation);
        for (std::size_t i = 0; i < config.size(); ++i)
            if (env[i] != f.heights()[i])
                throw Error(ErrorCode::NonConvex, "height of point " + std::to_string(i + 1) +
                                                      " lies above the lower hull of the heights");
        return out;
    }
    if (f.pieces().front().slope.size() != config.dim())
        throw Error(ErrorCode::InvalidArgument, "affine pieces do not match the configuration dimension");
    const auto q = convex_hull(config.points());
    const Int k = minimal_dilation(f, q);
    std::vector<RationalVector> scaled;
    for (const auto& v : q.vertices()) {
        RationalVector s = v;
        for (auto& c : s)
            c *= Rational(static_cast<long>(k));
        scaled.push_back(std::move(s));
    }
    const auto points = lattice_points(convex_hull(scaled));
    const bool reuse = k == 1 && std::all_of(points.begin(), points.end(), [&](const IntVector& p) {
                           return std::find(config.points().begin(), config.points().end(), p) !=
                                  config.points().end();
                       });
    out.dilation = k;
    out.config = reuse ? config
                       : PointConfiguration(points, config.name() + (k == 1 ? std::string("-lattice")
                                                                             : "-x" + std::to_string(k)));
    for (const auto& p : out.config.points()) {
        RationalVector x = to_rational(p);
        for (auto& c : x)
            c /= Rational(static_cast<long>(k));
        out.values.push_back(f(x));
    }
    out.triangulation = lower_triangulation(out.config, out.values);
    return out;
}

Rational integral_over_Q(const PointConfiguration& config, const RationalVector& values, const Triangulation& t)
{
    check_values(config, values);
    check_linear(config, values, t);
    const std::size_t n = config.dim();
    Rational total = 0;
    for (auto c : t.cells()) {
        std::vector<const IntVector*> pts;
        Rational s = 0;
        for (auto i : cell_indices(c)) {
            pts.push_back(&config[i]);
            s += values[i];
        }
        total += Rational(static_cast<long>(normalized_volume(pts))) * s;
    }
    return total / factorial(n + 1);
}

Rational boundary_integral(const PointConfiguration& config, const RationalVector& values, const Triangulation& t)
{
    check_values(config, values);
    check_linear(config, values, t);
    const std::size_t n = config.dim();
    std::map<Cell, int> walls;
    for (auto c : t.cells())
        for (Cell r = c; r; r &= r - 1)
            ++walls[c & ~(r & (~r + 1))];
    Rational total = 0;
    for (const auto& [wall, count] : walls) {
        if (count != 1)
            continue;
        std::vector<const IntVector*> pts;
        Rational s = 0;
        for (auto i : cell_indices(wall)) {
            pts.push_back(&config[i]);
            s += values[i];
        }
        total += Rational(static_cast<long>(normalized_volume(pts))) * s;
    }
    return total / factorial(n);
}

Rational k_energy_integral(const PLFunction& f, const PointConfiguration& config)
{
    const auto induced = induced_triangulation(f, config);
    const auto& c = induced.config;
    const std::size_t n = c.dim();
    const auto hull = convex_hull(c.points());
    const Rational vol(static_cast<long>(lattice_volume(hull)));
    const Rational vol_boundary(static_cast<long>(boundary_lattice_volume(hull)));
    Rational l = boundary_integral(c, induced.values, induced.triangulation) -
                 Rational(static_cast<long>(n)) * vol_boundary / vol *
                     integral_over_Q(c, induced.values, induced.triangulation);
    for (std::size_t i = 1; i < n; ++i)
        l /= Rational(static_cast<long>(induced.dilation));
    return l;
}

Rational k_energy_pairing(const PLFunction& f, const PointConfiguration& config)
{
    const auto induced = induced_triangulation(f, config);
    return pairing_value(induced, induced.triangulation);
}

Rational k_energy_pairing(const InducedTriangulation& induced, const Triangulation& t)
{
    const auto& config = induced.config;
    check_values(config, induced.values);
    for (auto c : t.cells()) {
        if (static_cast<std::size_t>(cell_size(c)) != config.dim() + 1)
            throw Error(ErrorCode::InvalidArgument, "cells must be full-dimensional simplices");
        const auto ell = interpolate(config, c, induced.values);
        for (std::size_t i = 0; i < config.size(); ++i)
            if (ell(config[i]) > induced.values[i])
                throw Error(ErrorCode::TriangulationMismatch,
                            "function is not affine on cell " + Triangulation({c}).encode());
    }
    return pairing_value(induced, t);
}

RationalVector random_convex_heights(const PointConfiguration& config, std::mt19937_64& rng, long range,
                                     long denominator)
{
    if (range < 0 || denominator < 1)
        throw Error(ErrorCode::InvalidArgument, "random heights need range >= 0 and denominator >= 1");
    // Uniform draws by rejection on the raw engine output.
    auto uniform = [&](long lo, long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / span * span;
        std::uint64_t x = rng();
        while (x >= limit)
            x = rng();
        return lo + static_cast<long>(x % span);
    };
    RationalVector h;
    for (std::size_t i = 0; i < config.size(); ++i) {
        const long q = uniform(1, denominator);
        const long p = uniform(-range * q, range * q);
        h.emplace_back(p, q);
        h.back().canonicalize();
    }
    return convex_envelope(config, h);
}

}  // namespace hurwitz
