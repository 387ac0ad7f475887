// Exact lattice geometry: point configurations, lattice volumes, convex
// hulls with facet descriptions, face enumeration and normal fans.

#ifndef HURWITZ_GEOMETRY_HPP
#define HURWITZ_GEOMETRY_HPP

#include "hurwitz/arith.hpp"
#include "hurwitz/linalg.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace hurwitz {

/// Labeled lattice points A = {w_1, ..., w_{N+1}} in Z^n.  Labels are
/// 1-based in every external representation; indices are 0-based.
class PointConfiguration {
public:
    static constexpr std::size_t max_points = 64;

    PointConfiguration() = default;
    /// Throws Error(BadConfig) unless the points are distinct, of equal
    /// dimension n >= 1, and affinely span R^n.
    explicit PointConfiguration(std::vector<IntVector> points, std::string name = {});

    std::size_t size() const { return points_.size(); }
    std::size_t dim() const { return dim_; }
    const IntVector& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<IntVector>& points() const { return points_; }
    const std::string& name() const { return name_; }

    /// Stable hex digest of dimension and ordered coordinates.
    std::string digest() const;

    friend bool operator==(const PointConfiguration& a, const PointConfiguration& b)
    {
        return a.points_ == b.points_;
    }

private:
    std::vector<IntVector> points_;
    std::size_t dim_ = 0;
    std::string name_;
};

/// Normalized volume of the simplex spanned by the given points, measured in
/// the lattice of its own affine span (0 for affinely dependent input).
Int normalized_volume(const std::vector<const IntVector*>& simplex);
Int normalized_volume(const std::vector<IntVector>& simplex);

/// Inequality normal . x >= offset.  The normal lies in the direction space of
/// the polytope's affine hull (orthogonal projection) and is primitive.
struct Facet {
    IntVector normal;
    Rational offset;

    friend bool operator==(const Facet&, const Facet&) = default;
};

struct Face {
    std::vector<std::size_t> vertices;  // indices into LatticePolytope::vertices()
    std::vector<std::size_t> facets;    // supporting facets (empty for the polytope itself)
    std::size_t dim = 0;
};

class LatticePolytope {
public:
    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return dim_; }
    const std::vector<RationalVector>& vertices() const { return vertices_; }
    const std::vector<Facet>& facets() const { return facets_; }
    /// Vertex indices on each facet.
    const std::vector<std::vector<std::size_t>>& incidence() const { return incidence_; }
    /// Canonical reduced echelon basis of the direction space of the affine hull.
    const RationalMatrix& direction_basis() const { return direction_; }

    bool has_lattice_vertices() const;
    /// Exact test against facets and affine hull equations.
    bool contains(const RationalVector& point) const;

private:
    friend LatticePolytope convex_hull(const std::vector<RationalVector>& points);

    std::size_t ambient_ = 0;
    std::size_t dim_ = 0;
    std::vector<RationalVector> vertices_;
    std::vector<Facet> facets_;
    std::vector<std::vector<std::size_t>> incidence_;
    RationalMatrix direction_;
};

LatticePolytope convex_hull(const std::vector<RationalVector>& points);
LatticePolytope convex_hull(const std::vector<IntVector>& points);

/// All faces of dimension k, 0 <= k <= dim; throws Error(InvalidArgument) otherwise.
std::vector<Face> faces(const LatticePolytope& polytope, std::size_t k);

/// Total lattice length of the boundary of a lattice polygon.
Int boundary_volume(const LatticePolytope& polygon);

/// Normalized volume of a full-dimensional lattice polytope, summed over a
/// pulling (fan) triangulation of its vertices.
Int lattice_volume(const LatticePolytope& polytope);

/// Full-dimensional simplices (as vertex index lists) of a fan triangulation
/// of conv(vertices): every simplex contains the lowest-index vertex.
std::vector<std::vector<std::size_t>> fan_triangulation(const LatticePolytope& polytope);

/// One maximal cone per vertex, given by its sorted primitive ray generators
/// (inner facet normals in the direction space).
struct NormalFan {
    RationalMatrix direction;
    std::vector<std::vector<IntVector>> cones;  // sorted

    friend bool operator==(const NormalFan&, const NormalFan&) = default;
};

/// Throws Error(InvalidArgument) for a point polytope.
NormalFan normal_fan(const LatticePolytope& polytope);

/// True iff the affine hulls are parallel and the normal fans coincide; two
/// points are normally equivalent, a point and a non-point are not.
bool normally_equivalent(const LatticePolytope& a, const LatticePolytope& b);

RationalVector to_rational(const IntVector& v);

}  // namespace hurwitz

#endif
