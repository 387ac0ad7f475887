// Triangulations of point configurations: validation, bistellar flips,
// placing triangulations and exact regularity certificates.

#ifndef HURWITZ_TRIANGULATION_HPP
#define HURWITZ_TRIANGULATION_HPP

#include "hurwitz/geometry.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hurwitz {

/// A simplex as a bitmask over 0-based point indices.
using Cell = std::uint64_t;

inline int cell_size(Cell c) { return __builtin_popcountll(c); }
inline Cell bit(std::size_t i) { return Cell{1} << i; }

/// Lexicographic order of the sorted index lists of two cells.
inline bool cell_less(Cell a, Cell b)
{
    if (a == b)
        return false;
    const Cell d = a ^ b;
    const Cell low = d & (~d + 1);
    const Cell above = ~((low << 1) - 1);
    if (a & low)
        return (b & above) != 0;
    return (a & above) == 0;
}

std::vector<std::size_t> cell_indices(Cell c);
Cell cell_from_indices(const std::vector<std::size_t>& indices);

/// Set of maximal simplices in canonical order.  Triangulations are plain
/// values; every operation that needs coordinates takes the configuration.
class Triangulation {
public:
    Triangulation() = default;
    /// Sorts the cells canonically; performs no geometric validation.
    explicit Triangulation(std::vector<Cell> cells);

    const std::vector<Cell>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }
    /// Union of the vertex sets of all cells.
    Cell used_points() const;
    /// 1-based label tuples, lexicographically sorted.
    std::vector<std::vector<std::size_t>> simplices() const;
    /// "1,2,3;1,3,4"
    std::string encode() const;
    static Triangulation decode(const std::string& text);

    friend bool operator==(const Triangulation&, const Triangulation&) = default;
    friend bool operator<(const Triangulation& a, const Triangulation& b);

private:
    std::vector<Cell> cells_;
};

struct TriangulationHash {
    std::size_t operator()(const Triangulation& t) const noexcept;
};

/// Circuit Z = (Z+, Z-): the signs of the unique affine dependence on Z.
struct Circuit {
    Cell positive = 0;
    Cell negative = 0;

    Cell support() const { return positive | negative; }
    Circuit reversed() const { return {negative, positive}; }
    friend auto operator<=>(const Circuit&, const Circuit&) = default;
};

struct RegularityCertificate {
    RationalVector heights;
    /// min over cells and points off the cell of g(w) - l_cell(w).
    Rational slack;
};

struct RegularityResult {
    std::optional<RegularityCertificate> certificate;
    /// Nonnegative multipliers of the local folding conditions summing to
    /// zero, present when the triangulation is not regular.
    RationalVector obstruction;

    bool regular() const { return certificate.has_value(); }
};

/// Per-configuration caches shared by flips, regularity tests and
/// enumeration.  Safe to use from several threads.
class TriangulationContext {
public:
    explicit TriangulationContext(PointConfiguration config);
    ~TriangulationContext();
    TriangulationContext(const TriangulationContext&) = delete;
    TriangulationContext& operator=(const TriangulationContext&) = delete;

    const PointConfiguration& config() const { return config_; }
    const LatticePolytope& hull() const { return hull_; }
    Int hull_volume() const { return hull_volume_; }

    Int volume(Cell c) const;
    /// Primitive affine dependence on the n+2 points of `support` (which
    /// must contain a full-dimensional simplex), indexed by point.
    const IntVector& spanning_dependence(Cell support) const;

    std::vector<Circuit> supported_flips(const Triangulation& t) const;
    /// nullopt unless t is supported on z in either orientation.  z must be a
    /// circuit of the configuration; that is not rechecked here.
    std::optional<Triangulation> try_flip(const Triangulation& t, const Circuit& z) const;

    /// Exact Gordan test of the local folding conditions.  Fast path used by
    /// enumeration; no certificate verification.
    bool regular(const Triangulation& t) const;
    RegularityResult is_regular(const Triangulation& t) const;

private:
    struct Cache;
    PointConfiguration config_;
    LatticePolytope hull_;
    Int hull_volume_ = 0;
    std::unique_ptr<Cache> cache_;
};

/// Checks simplices given as 1-based label tuples and returns the canonical
/// triangulation.  Errors: DegenerateSimplex, OverlapNotFace, VolumeMismatch
/// (checked in that order), InvalidArgument for malformed tuples.
Triangulation validate(const PointConfiguration& config, const std::vector<std::vector<std::size_t>>& simplices);

RegularityResult is_regular(const PointConfiguration& config, const Triangulation& t);

/// Places the points in the given 1-based label order.
Triangulation placing_triangulation(const PointConfiguration& config, const std::vector<std::size_t>& order);
Triangulation placing_triangulation(const PointConfiguration& config);

std::vector<Circuit> supported_flips(const PointConfiguration& config, const Triangulation& t);
/// Throws Error(UnsupportedFlip) when z is not a circuit or t is not
/// supported on it.
Triangulation flip(const PointConfiguration& config, const Triangulation& t, const Circuit& z);

/// Regular subdivision induced by lexicographic heights (level 0 first).
/// Returns nullopt when some lower cell is not a simplex.
std::optional<Triangulation> lower_hull_triangulation(const PointConfiguration& config,
                                                      const std::vector<RationalVector>& height_levels);

}  // namespace hurwitz

#endif
