// The Cayley prism A x {0,1} of a planar configuration, vertical
// triangulations, nu-vectors and modifications along cubic mixed simplices.

#ifndef HURWITZ_PRISM_HPP
#define HURWITZ_PRISM_HPP

#include "hurwitz/gkz.hpp"

#include <vector>

namespace hurwitz {

/// Point (w_i, 0) keeps index i and (w_i, 1) gets index N+1+i, so the prism
/// of an (N+1)-point configuration has 2(N+1) points.  Throws
/// Error(DimensionUnsupported) unless the configuration is planar.
PointConfiguration prism_configuration(const PointConfiguration& base);

/// A mixed tetrahedron conv(b+_i, b+_j, b-_k, b-_l), where b+ lies at height
/// 0 and b- at height 1; 0-based base indices with i < j, k < l, all distinct.
struct CubicMixedSimplex {
    Cell cell = 0;
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t k = 0;
    std::size_t l = 0;

    friend auto operator<=>(const CubicMixedSimplex&, const CubicMixedSimplex&) = default;
};

/// Circuits of the two modifications around a cubic mixed simplex.
struct CubicModifications {
    Circuit z1;  // on b+_i, b+_j, b+_k, b-_k, b-_l
    Circuit z2;  // on b+_i, b+_j, b-_i, b-_k, b-_l
};

class PrismContext {
public:
    explicit PrismContext(const PointConfiguration& base);

    const PointConfiguration& base() const { return base_; }
    const PointConfiguration& prism() const { return triangulations_.config(); }
    const TriangulationContext& triangulations() const { return triangulations_; }
    const WeightCalculator& weights() const { return weights_; }
    std::size_t lower(std::size_t i) const { return i; }
    std::size_t upper(std::size_t i) const { return base_.size() + i; }

    /// nu_i = m(b+_i) + m(b-_i) for the massive GKZ vector m of t.
    WeightVector nu(const Triangulation& t) const;

    /// Cubic mixed simplices of t: mixed cells whose four companion
    /// tetrahedra are also cells of t.
    std::vector<CubicMixedSimplex> cubic_mixed(const Triangulation& t) const;
    CubicModifications circuits(const CubicMixedSimplex& s) const;
    /// Predicted change of nu under the Z1 modification; the Z2 change is its
    /// negative.
    IntVector nu_shift(const CubicMixedSimplex& s) const;

    /// Throws Error(UnsupportedFlip) when t is not supported on z.
    Triangulation modify(const Triangulation& t, const Circuit& z) const;

private:
    PointConfiguration base_;
    TriangulationContext triangulations_;
    WeightCalculator weights_;
};

/// Staircase refinement of T x [0,1]: each triangle v0 < v1 < v2 (ordered by
/// position in the 1-based label order, or by label) becomes three tetrahedra.
Triangulation vertical_triangulation(const PointConfiguration& base, const Triangulation& t,
                                     const std::vector<std::size_t>& order = {});

WeightVector nu_vector(const PointConfiguration& base, const Triangulation& prism_triangulation);
std::vector<CubicMixedSimplex> find_cubic_mixed(const PointConfiguration& base, const Triangulation& t);
Triangulation modify_along_circuit(const PointConfiguration& base, const Triangulation& t, const Circuit& z);
bool h_equivalent(const PointConfiguration& base, const Triangulation& a, const Triangulation& b);

}  // namespace hurwitz

#endif
