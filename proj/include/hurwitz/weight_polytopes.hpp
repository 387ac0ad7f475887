// Weight polytopes of regular triangulations: the secondary (Chow) polytope,
// the convex hull of Hurwitz vectors and the convex hull of nu-vectors of the
// prism, together with degree, inclusion and equivalence checks.

#ifndef HURWITZ_WEIGHT_POLYTOPES_HPP
#define HURWITZ_WEIGHT_POLYTOPES_HPP

#include "hurwitz/enumeration.hpp"
#include "hurwitz/prism.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace hurwitz {

enum class PolytopeKind { Chow, HurwitzCandidate, PrismHurwitz };

std::string_view to_string(PolytopeKind kind);

struct WeightPolytope {
    PolytopeKind kind = PolytopeKind::Chow;
    LatticePolytope polytope;
    /// Distinct weight vectors, sorted.
    std::vector<IntVector> generators;
    /// Integer vertices, sorted.
    std::vector<IntVector> vertices;
    /// Encodings of the triangulations attaining each vertex, sorted.
    std::map<IntVector, std::vector<std::string>> sources;
    std::size_t triangulations = 0;
};

/// Builds the polytope from (vector, triangulation encoding) pairs.
WeightPolytope assemble_polytope(PolytopeKind kind, const std::vector<std::pair<IntVector, std::string>>& items);

WeightPolytope secondary_polytope(const PointConfiguration& config, const EnumerationOptions& options = {});
WeightPolytope hurwitz_candidate_polytope(const PointConfiguration& config, const EnumerationOptions& options = {});
WeightPolytope prism_hurwitz_polytope(const PointConfiguration& config, const EnumerationOptions& options = {});

/// Common coordinate sum of the generators divided by k.  Errors:
/// NonconstantSum when the sums differ, InvalidArgument when k does not
/// divide the sum.
Int degree_from_polytope(const WeightPolytope& polytope, Int k);

/// (n+1) vol(Q) - vol(boundary of Q), with boundary facets measured in their
/// own lattices.
Int hurwitz_degree_formula(const LatticePolytope& q);
/// Sum of the normalized volumes of the facets of a full-dimensional lattice
/// polytope.
Int boundary_lattice_volume(const LatticePolytope& q);

/// (x_1 - x_{N+1}, ..., x_N - x_{N+1})
IntVector project_pi(const IntVector& v);

/// Every vertex of `inner` lies in `outer`.
bool inclusion(const LatticePolytope& inner, const LatticePolytope& outer);

struct VertexEdgeCorrespondence {
    std::size_t vertices_a = 0;
    std::size_t vertices_b = 0;
    std::size_t edges_a = 0;
    std::size_t edges_b = 0;
    /// Vertices of a whose normal cone is a normal cone of b.
    std::size_t matched_vertices = 0;
    /// Edges of a whose matched endpoints span a parallel, equally oriented
    /// edge of b.
    std::size_t parallel_edges = 0;
    bool bijective() const
    {
        return vertices_a == vertices_b && edges_a == edges_b && matched_vertices == vertices_a &&
               parallel_edges == edges_a;
    }
};

VertexEdgeCorrespondence vertex_edge_correspondence(const LatticePolytope& a, const LatticePolytope& b);

struct ConjectureReport {
    std::string name;
    std::size_t triangulations = 0;
    std::size_t prism_triangulations = 0;
    /// Vertices of the convex hull of the nu-vectors.
    std::size_t hurwitz_vertices = 0;
    /// conv(xi) and the Chow polytope are normally equivalent.
    bool normally_equivalent = false;
    /// The vertex sets of conv(nu) and conv(xi) coincide.
    bool vertices_match = false;
    /// Every Hurwitz vector lies in conv(nu).
    bool xi_in_nu_hull = false;
};

ConjectureReport check_conjecture(const PointConfiguration& config, const EnumerationOptions& options = {});

struct SemistabilityReport {
    Int chow_degree = 0;
    Int hurwitz_degree = 0;
    /// deg(Hurwitz) * Pi(Chow) is contained in deg(Chow) * Pi(conv xi).
    bool semistable = false;
};

SemistabilityReport k_semistable(const PointConfiguration& config, const EnumerationOptions& options = {});

}  // namespace hurwitz

#endif
