#include "hurwitz/triangulation.hpp"

#include "hurwitz/combinatorics.hpp"
#include "hurwitz/error.hpp"
#include "hurwitz/linalg.hpp"
#include "hurwitz/lp.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <unordered_map>

namespace hurwitz {

std::vector<std::size_t> cell_indices(Cell c)
{
    std::vector<std::size_t> out;
    while (c) {
        out.push_back(static_cast<std::size_t>(__builtin_ctzll(c)));
        c &= c - 1;
    }
    return out;
}

Cell cell_from_indices(const std::vector<std::size_t>& indices)
{
    Cell c = 0;
    for (auto i : indices) {
        if (i >= 64)
            throw Error(ErrorCode::InvalidArgument, "point index out of range");
        c |= bit(i);
    }
    return c;
}

// ---------------------------------------------------------------------------
// Triangulation values

Triangulation::Triangulation(std::vector<Cell> cells) : cells_(std::move(cells))
{
    std::sort(cells_.begin(), cells_.end(), cell_less);
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

Cell Triangulation::used_points() const
{
    Cell u = 0;
    for (auto c : cells_)
        u |= c;
    return u;
}

std::vector<std::vector<std::size_t>> Triangulation::simplices() const
{
    std::vector<std::vector<std::size_t>> out;
    out.reserve(cells_.size());
    for (auto c : cells_) {
        auto idx = cell_indices(c);
        for (auto& i : idx)
            ++i;
        out.push_back(std::move(idx));
    }
    return out;
}

std::string Triangulation::encode() const
{
    std::string out;
    for (std::size_t k = 0; k < cells_.size(); ++k) {
        if (k)
            out += ';';
        bool first = true;
        for (auto i : cell_indices(cells_[k])) {
            if (!first)
                out += ',';
            first = false;
            out += std::to_string(i + 1);
        }
    }
    return out;
}

Triangulation Triangulation::decode(const std::string& text)
{
    std::vector<Cell> cells;
    std::stringstream cells_in(text);
    std::string item;
    while (std::getline(cells_in, item, ';')) {
        std::stringstream labels_in(item);
        std::string label;
        Cell c = 0;
        while (std::getline(labels_in, label, ',')) {
            std::size_t pos = 0;
            unsigned long v = 0;
            try {
                v = std::stoul(label, &pos);
            } catch (const std::exception&) {
                pos = 0;
            }
            if (pos != label.size() || label.empty() || v == 0 || v > 64)
                throw Error(ErrorCode::InvalidArgument, "bad triangulation encoding: '" + text + "'");
            c |= bit(v - 1);
        }
        if (c == 0)
            throw Error(ErrorCode::InvalidArgument, "bad triangulation encoding: '" + text + "'");
        cells.push_back(c);
    }
    return Triangulation(std::move(cells));
}

bool operator<(const Triangulation& a, const Triangulation& b)
{
    return std::lexicographical_compare(a.cells_.begin(), a.cells_.end(), b.cells_.begin(), b.cells_.end(),
                                        cell_less);
}

std::size_t TriangulationHash::operator()(const Triangulation& t) const noexcept
{
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto c : t.cells()) {
        h ^= c + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h *= 0xff51afd7ed558ccdULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
}

// ---------------------------------------------------------------------------
// Dependences

namespace {

// Cofactor expansion of the (n+1) x (n+2) matrix [points; 1].
IntVector compute_spanning_dependence(const PointConfiguration& config, Cell support)
{
    const std::size_t n = config.dim();
    auto idx = cell_indices(support);
    if (idx.size() != n + 2)
        throw std::logic_error("spanning dependence needs n+2 points");
    IntVector out(config.size(), 0);
    IntMatrix minor(n + 1, IntVector(n + 1));
    bool nonzero = false;
    for (std::size_t skip = 0; skip < idx.size(); ++skip) {
        std::size_t col = 0;
        for (std::size_t j = 0; j < idx.size(); ++j) {
            if (j == skip)
                continue;
            const auto& p = config[idx[j]];
            for (std::size_t r = 0; r < n; ++r)
                minor[r][col] = p[r];
            minor[n][col] = 1;
            ++col;
        }
        Int d = determinant(minor);
        out[idx[skip]] = (skip % 2 == 0) ? d : -d;
        nonzero = nonzero || d != 0;
    }
    if (!nonzero)
        throw std::logic_error("points do not span");
    make_primitive(out);
    for (auto i : idx) {
        if (out[i] != 0) {
            if (out[i] < 0)
                for (auto& v : out)
                    v = -v;
            break;
        }
    }
    return out;
}

Int cell_volume(const PointConfiguration& config, Cell c)
{
    std::vector<const IntVector*> pts;
    for (auto i : cell_indices(c))
        pts.push_back(&config[i]);
    return normalized_volume(pts);
}

}  // namespace

struct TriangulationContext::Cache {
    static constexpr std::size_t shards = 64;
    struct Shard {
        std::mutex mutex;
        std::unordered_map<Cell, IntVector> dependences;
    };
    std::array<Shard, shards> table;
};

TriangulationContext::TriangulationContext(PointConfiguration config)
    : config_(std::move(config)), cache_(std::make_unique<Cache>())
{
    hull_ = convex_hull(config_.points());
    hull_volume_ = lattice_volume(hull_);
}

TriangulationContext::~TriangulationContext() = default;

Int TriangulationContext::volume(Cell c) const
{
    return cell_volume(config_, c);
}

const IntVector& TriangulationContext::spanning_dependence(Cell support) const
{
    auto& shard = cache_->table[(support * 0x9e3779b97f4a7c15ULL) >> 58];
    {
        std::lock_guard lock(shard.mutex);
        auto it = shard.dependences.find(support);
        if (it != shard.dependences.end())
            return it->second;
    }
    IntVector dep = compute_spanning_dependence(config_, support);
    std::lock_guard lock(shard.mutex);
    return shard.dependences.emplace(support, std::move(dep)).first->second;
}

// ---------------------------------------------------------------------------
// Flips

namespace {

// Common link of the faces Z \ z for z in Z+, if T is supported on z.
std::optional<std::vector<Cell>> supported_link(const std::vector<Cell>& cells, const Circuit& z)
{
    const Cell support = z.support();
    std::optional<std::vector<Cell>> common;
    for (Cell p = z.positive; p; p &= p - 1) {
        const Cell face = support & ~(p & (~p + 1));
        std::vector<Cell> link;
        for (auto c : cells)
            if ((c & face) == face)
                link.push_back(c & ~face);
        if (link.empty())
            return std::nullopt;
        std::sort(link.begin(), link.end());
        if (!common)
            common = std::move(link);
        else if (*common != link)
            return std::nullopt;
    }
    return common;
}

std::vector<Cell> apply_flip(const std::vector<Cell>& cells, const Circuit& z, const std::vector<Cell>& link)
{
    const Cell support = z.support();
    std::set<Cell> removed;
    for (Cell p = z.positive; p; p &= p - 1) {
        const Cell face = support & ~(p & (~p + 1));
        for (auto r : link)
            removed.insert(face | r);
    }
    std::vector<Cell> out;
    out.reserve(cells.size() + link.size() * static_cast<std::size_t>(cell_size(z.negative)));
    for (auto c : cells)
        if (!removed.count(c))
            out.push_back(c);
    for (Cell q = z.negative; q; q &= q - 1) {
        const Cell face = support & ~(q & (~q + 1));
        for (auto r : link)
            out.push_back(face | r);
    }
    return out;
}

Circuit circuit_from(const IntVector& dep, std::size_t positive_index)
{
    const int s = dep[positive_index] > 0 ? 1 : -1;
    Circuit z;
    for (std::size_t i = 0; i < dep.size(); ++i) {
        if (dep[i] * s > 0)
            z.positive |= bit(i);
        else if (dep[i] * s < 0)
            z.negative |= bit(i);
    }
    return z;
}

}  // namespace

std::vector<Circuit> TriangulationContext::supported_flips(const Triangulation& t) const
{
    const auto& cells = t.cells();
    const int n = static_cast<int>(config_.dim());
    std::set<Circuit> candidates;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        for (std::size_t j = i + 1; j < cells.size(); ++j) {
            if (cell_size(cells[i] & cells[j]) != n)
                continue;
            const Cell b = cells[j] & ~cells[i];
            const auto& dep = spanning_dependence(cells[i] | b);
            candidates.insert(circuit_from(dep, static_cast<std::size_t>(__builtin_ctzll(b))));
        }
    }
    const Cell used = t.used_points();
    for (std::size_t w = 0; w < config_.size(); ++w) {
        if (used & bit(w))
            continue;
        for (auto c : cells) {
            const auto& dep = spanning_dependence(c | bit(w));
            Circuit z = circuit_from(dep, w);
            if (z.positive == bit(w)) {
                candidates.insert(z);
                break;
            }
        }
    }
    std::vector<Circuit> out;
    for (const auto& z : candidates)
        if (supported_link(cells, z))
            out.push_back(z);
    return out;
}

std::optional<Triangulation> TriangulationContext::try_flip(const Triangulation& t, const Circuit& z) const
{
    if (z.positive == 0 || z.negative == 0 || (z.positive & z.negative))
        return std::nullopt;
    if (auto link = supported_link(t.cells(), z))
        return Triangulation(apply_flip(t.cells(), z, *link));
    if (auto link = supported_link(t.cells(), z.reversed()))
        return Triangulation(apply_flip(t.cells(), z.reversed(), *link));
    return std::nullopt;
}

std::vector<Circuit> supported_flips(const PointConfiguration& config, const Triangulation& t)
{
    TriangulationContext ctx(config);
    return ctx.supported_flips(t);
}

namespace {

bool is_circuit(const PointConfiguration& config, const Circuit& z)
{
    if (z.positive == 0 || z.negative == 0 || (z.positive & z.negative))
        return false;
    const auto idx = cell_indices(z.support());
    if (idx.back() >= config.size())
        return false;
    const std::size_t n = config.dim();
    IntMatrix m(n + 1, IntVector(idx.size()));
    for (std::size_t c = 0; c < idx.size(); ++c) {
        for (std::size_t r = 0; r < n; ++r)
            m[r][c] = config[idx[c]][r];
        m[n][c] = 1;
    }
    const auto kernel = integer_kernel(m, idx.size());
    if (kernel.size() != 1)
        return false;
    const int orient = kernel.front()[0] > 0 ? 1 : -1;
    const bool first_positive = (z.positive & bit(idx[0])) != 0;
    for (std::size_t c = 0; c < idx.size(); ++c) {
        const Int x = kernel.front()[c] * orient;
        if (x == 0 || (x > 0) != (((z.positive & bit(idx[c])) != 0) == first_positive))
            return false;
    }
    return true;
}

}  // namespace

Triangulation flip(const PointConfiguration& config, const Triangulation& t, const Circuit& z)
{
    if (!is_circuit(config, z))
        throw Error(ErrorCode::UnsupportedFlip, "the given signs are not a circuit of the configuration");
    TriangulationContext ctx(config);
    auto out = ctx.try_flip(t, z);
    if (!out)
        throw Error(ErrorCode::UnsupportedFlip, "triangulation is not supported on the circuit");
    return *out;
}

// ---------------------------------------------------------------------------
// Regularity

namespace {

// Local folding conditions: every row must satisfy sign * (c . g) > 0, the
// sign making the two opposite vertices (or the unused point) positive.
struct FoldRow {
    const IntVector* dep;
    int sign;
};

std::vector<FoldRow> folding_rows(const TriangulationContext& ctx, const Triangulation& t)
{
    const auto& cells = t.cells();
    const int n = static_cast<int>(ctx.config().dim());
    std::vector<FoldRow> rows;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        for (std::size_t j = i + 1; j < cells.size(); ++j) {
            if (cell_size(cells[i] & cells[j]) != n)
                continue;
            const auto& dep = ctx.spanning_dependence(cells[i] | cells[j]);
            const auto b = static_cast<std::size_t>(__builtin_ctzll(cells[j] & ~cells[i]));
            rows.push_back({&dep, dep[b] > 0 ? 1 : -1});
        }
    }
    const Cell used = t.used_points();
    for (std::size_t w = 0; w < ctx.config().size(); ++w) {
        if (used & bit(w))
            continue;
        for (auto c : cells) {
            const auto& dep = ctx.spanning_dependence(c | bit(w));
            if (circuit_from(dep, w).positive == bit(w)) {
                rows.push_back({&dep, dep[w] > 0 ? 1 : -1});
                break;
            }
        }
    }
    return rows;
}

template <class Num>
lp::FarkasResult<Num> gordan(const std::vector<FoldRow>& rows, std::size_t points)
{
    // y >= 0, sum_r y_r s_r c_r = 0, sum_r y_r = 1.
    std::vector<std::vector<Num>> a(points + 1, std::vector<Num>(rows.size(), Num(0)));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t i = 0; i < points; ++i)
            if ((*rows[r].dep)[i] != 0)
                a[i][r] = Num(static_cast<Int>(rows[r].sign * (*rows[r].dep)[i]));
        a[points][r] = Num(1);
    }
    std::vector<Num> b(points + 1, Num(0));
    b[points] = Num(1);
    return lp::feasible_or_farkas(a, b);
}

template <class Num>
Rational to_rational_value(const Num& v)
{
    if constexpr (std::is_same_v<Num, Rational>)
        return v;
    else
        return v.to_mpq();
}

struct GordanOutcome {
    bool regular = false;
    RationalVector vector;  // heights or multipliers
};

GordanOutcome solve_gordan(const std::vector<FoldRow>& rows, std::size_t points)
{
    auto convert = [&](auto result) {
        GordanOutcome out;
        out.regular = !result.feasible;
        const auto& src = result.feasible ? result.x : result.certificate;
        for (std::size_t i = 0; i < (result.feasible ? src.size() : points); ++i)
            out.vector.push_back(to_rational_value(src[i]));
        return out;
    };
    try {
        return convert(gordan<SmallRational>(rows, points));
    } catch (const ArithmeticOverflow&) {
        return convert(gordan<Rational>(rows, points));
    }
}

}  // namespace

bool TriangulationContext::regular(const Triangulation& t) const
{
    auto rows = folding_rows(*this, t);
    if (rows.empty())
        return true;
    return solve_gordan(rows, config_.size()).regular;
}

RegularityResult TriangulationContext::is_regular(const Triangulation& t) const
{
    RegularityResult result;
    auto rows = folding_rows(*this, t);
    RationalVector heights(config_.size(), Rational(0));
    if (!rows.empty()) {
        auto outcome = solve_gordan(rows, config_.size());
        if (!outcome.regular) {
            result.obstruction = std::move(outcome.vector);
            return result;
        }
        IntVector g = primitive_integer(outcome.vector);
        for (std::size_t i = 0; i < g.size(); ++i)
            heights[i] = Rational(static_cast<long>(g[i]));
    }

    // Verify the certificate against the definition: every point off a cell
    // lifts strictly above that cell's affine interpolation.
    std::optional<Rational> slack;
    for (auto c : t.cells()) {
        for (std::size_t w = 0; w < config_.size(); ++w) {
            if (c & bit(w))
                continue;
            const auto& dep = spanning_dependence(c | bit(w));
            Rational lift = 0;
            for (std::size_t i = 0; i < dep.size(); ++i)
                if (dep[i] != 0)
                    lift += Rational(static_cast<long>(dep[i])) * heights[i];
            Rational gap = lift / Rational(static_cast<long>(dep[w]));
            if (gap <= 0)
                throw std::logic_error("regularity certificate failed verification");
            if (!slack || gap < *slack)
                slack = gap;
        }
    }
    result.certificate = RegularityCertificate{std::move(heights), slack.value_or(Rational(1))};
    return result;
}

RegularityResult is_regular(const PointConfiguration& config, const Triangulation& t)
{
    TriangulationContext ctx(config);
    return ctx.is_regular(t);
}

// ---------------------------------------------------------------------------
// Lower hulls

std::optional<Triangulation> lower_hull_triangulation(const PointConfiguration& config,
                                                      const std::vector<RationalVector>& height_levels)
{
    const std::size_t n = config.dim();
    const std::size_t m = config.size();
    for (const auto& level : height_levels)
        if (level.size() != m)
            throw Error(ErrorCode::InvalidArgument, "height vector has wrong length");
    std::vector<Cell> cells;
    Int total = 0;
    bool tie = false;
    for_each_combination(m, n + 1, [&](const std::vector<std::size_t>& idx) {
        if (tie)
            return;
        const Cell s = cell_from_indices(idx);
        if (cell_volume(config, s) == 0)
            return;
        bool lower = true;
        bool touching = false;
        for (std::size_t w = 0; w < m && lower; ++w) {
            if (s & bit(w))
                continue;
            IntVector dep = compute_spanning_dependence(config, s | bit(w));
            const int orient = dep[w] > 0 ? 1 : -1;
            int sign = 0;
            for (const auto& g : height_levels) {
                Rational v = 0;
                for (std::size_t i = 0; i < m; ++i)
                    if (dep[i] != 0)
                        v += Rational(static_cast<long>(orient * dep[i])) * g[i];
                sign = sgn(v);
                if (sign != 0)
                    break;
            }
            if (sign < 0)
                lower = false;
            else if (sign == 0)
                touching = true;
        }
        if (!lower)
            return;
        if (touching) {
            tie = true;
            return;
        }
        cells.push_back(s);
        total += cell_volume(config, s);
    });
    if (tie)
        return std::nullopt;
    Int expected = lattice_volume(convex_hull(config.points()));
    if (total != expected)
        return std::nullopt;
    return Triangulation(std::move(cells));
}

// ---------------------------------------------------------------------------
// Placing

Triangulation placing_triangulation(const PointConfiguration& config, const std::vector<std::size_t>& order)
{
    const std::size_t m = config.size();
    std::vector<bool> seen(m, false);
    if (order.size() != m)
        throw Error(ErrorCode::InvalidArgument, "placing order must be a permutation of the labels");
    for (auto label : order) {
        if (label < 1 || label > m || seen[label - 1])
            throw Error(ErrorCode::InvalidArgument, "placing order must be a permutation of the labels");
        seen[label - 1] = true;
    }

    std::vector<Cell> cells{bit(order[0] - 1)};
    std::vector<const IntVector*> placed{&config[order[0] - 1]};
    std::size_t dim = 0;
    for (std::size_t k = 1; k < m; ++k) {
        const std::size_t p = order[k] - 1;
        placed.push_back(&config[p]);
        if (affine_dimension(placed) > dim) {
            ++dim;
            for (auto& c : cells)
                c |= bit(p);
            continue;
        }
        placed.pop_back();
        // Boundary facets of the current complex and their opposite vertex.
        std::map<Cell, std::pair<int, std::size_t>> facets;
        for (auto c : cells) {
            for (Cell v = c; v; v &= v - 1) {
                const Cell f = c & ~(v & (~v + 1));
                auto& entry = facets[f];
                ++entry.first;
                entry.second = static_cast<std::size_t>(__builtin_ctzll(v));
            }
        }
        std::vector<Cell> added;
        for (const auto& [f, info] : facets) {
            if (info.first != 1)
                continue;
            std::vector<const IntVector*> pts;
            for (auto i : cell_indices(f))
                pts.push_back(&config[i]);
            pts.push_back(&config[info.second]);
            pts.push_back(&config[p]);
            IntVector dep = affine_dependence(pts);
            const Int cv = dep[dep.size() - 2];
            const Int cp = dep[dep.size() - 1];
            if (cp != 0 && cv != 0 && ((cv > 0) == (cp > 0)))
                added.push_back(f | bit(p));
        }
        if (!added.empty()) {
            placed.push_back(&config[p]);
            cells.insert(cells.end(), added.begin(), added.end());
        }
    }
    return Triangulation(std::move(cells));
}

Triangulation placing_triangulation(const PointConfiguration& config)
{
    std::vector<std::size_t> order(config.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i + 1;
    return placing_triangulation(config, order);
}

// ---------------------------------------------------------------------------
// Validation

namespace {

// True when some circuit has its positive part in a and negative part in b.
bool improper_intersection(const PointConfiguration& config, Cell a, Cell b)
{
    const auto pts = cell_indices(a | b);
    const std::size_t n = config.dim();
    bool bad = false;
    for (std::size_t k = 2; k <= std::min(pts.size(), n + 2) && !bad; ++k) {
        for_each_combination(pts.size(), k, [&](const std::vector<std::size_t>& c) {
            if (bad)
                return;
            Cell z = 0;
            std::vector<const IntVector*> zp;
            for (auto i : c) {
                z |= bit(pts[i]);
                zp.push_back(&config[pts[i]]);
            }
            if ((z & ~a) == 0 || (z & ~b) == 0)
                return;
            IntVector dep;
            try {
                dep = affine_dependence(zp);
            } catch (const Error&) {
                return;  // not minimal
            }
            if (dep.empty() || std::any_of(dep.begin(), dep.end(), [](Int v) { return v == 0; }))
                return;
            Cell pos = 0;
            Cell neg = 0;
            for (std::size_t i = 0; i < c.size(); ++i)
                (dep[i] > 0 ? pos : neg) |= bit(pts[c[i]]);
            if (((pos & ~a) == 0 && (neg & ~b) == 0) || ((neg & ~a) == 0 && (pos & ~b) == 0))
                bad = true;
        });
    }
    return bad;
}

}  // namespace

Triangulation validate(const PointConfiguration& config, const std::vector<std::vector<std::size_t>>& simplices)
{
    const std::size_t n = config.dim();
    std::vector<Cell> cells;
    for (const auto& s : simplices) {
        if (s.size() != n + 1)
            throw Error(ErrorCode::InvalidArgument, "simplex must have n+1 labels");
        Cell c = 0;
        for (auto label : s) {
            if (label < 1 || label > config.size())
                throw Error(ErrorCode::InvalidArgument, "label out of range: " + std::to_string(label));
            c |= bit(label - 1);
        }
        if (static_cast<std::size_t>(cell_size(c)) != n + 1)
            throw Error(ErrorCode::InvalidArgument, "simplex repeats a label");
        cells.push_back(c);
    }
    if (cells.empty())
        throw Error(ErrorCode::VolumeMismatch, "no simplices");
    Triangulation t(cells);
    if (t.size() != cells.size())
        throw Error(ErrorCode::OverlapNotFace, "a simplex is listed twice");
    for (auto c : t.cells())
        if (cell_volume(config, c) == 0)
            throw Error(ErrorCode::DegenerateSimplex, "degenerate simplex " + Triangulation({c}).encode());
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j)
            if (improper_intersection(config, t.cells()[i], t.cells()[j]))
                throw Error(ErrorCode::OverlapNotFace, "simplices " + Triangulation({t.cells()[i]}).encode() +
                                                           " and " + Triangulation({t.cells()[j]}).encode() +
                                                           " do not meet in a common face");
    Int total = 0;
    for (auto c : t.cells())
        total = checked_add(total, cell_volume(config, c));
    const Int expected = lattice_volume(convex_hull(config.points()));
    if (total != expected)
        throw Error(ErrorCode::VolumeMismatch, "simplex volumes sum to " + std::to_string(total) +
                                                   ", expected " + std::to_string(expected));
    return t;
}

}  // namespace hurwitz
