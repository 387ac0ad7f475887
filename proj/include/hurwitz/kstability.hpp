// The toric non-Archimedean K-energy of convex rational piecewise-linear
// functions, evaluated by direct integration and by pairing with GKZ and
// Hurwitz vectors.

#ifndef HURWITZ_KSTABILITY_HPP
#define HURWITZ_KSTABILITY_HPP

#include "hurwitz/triangulation.hpp"

#include <random>
#include <vector>

namespace hurwitz {

/// x -> slope . x + constant
struct AffinePiece {
    RationalVector slope;
    Rational constant;
};

/// A convex PL function on conv(A): either the lower-hull interpolation of
/// heights on the points of A, or the maximum of finitely many affine pieces.
class PLFunction {
public:
    static PLFunction from_heights(RationalVector heights);
    static PLFunction from_affine(std::vector<AffinePiece> pieces);

    bool has_heights() const { return !heights_.empty(); }
    const RationalVector& heights() const { return heights_; }
    const std::vector<AffinePiece>& pieces() const { return pieces_; }

    /// lambda * f
    PLFunction scaled(const Rational& lambda) const;
    /// f + c
    PLFunction shifted(const Rational& c) const;
    /// Value of a max of affine pieces; throws for height functions.
    Rational operator()(const RationalVector& x) const;

private:
    RationalVector heights_;
    std::vector<AffinePiece> pieces_;
};

/// The configuration on which f is evaluated, f's values there and a regular
/// triangulation on whose cells f is affine.  For affine pieces whose
/// linearity domains have non-integral vertices the configuration is the set
/// of lattice points of kQ for the minimal such dilation k, and the values
/// are those of x -> f(x/k).
struct InducedTriangulation {
    PointConfiguration config;
    RationalVector values;
    Triangulation triangulation;
    Int dilation = 1;
};

/// Errors: NonConvex when a height lies strictly above the lower hull,
/// InvalidArgument for malformed input.
InducedTriangulation induced_triangulation(const PLFunction& f, const PointConfiguration& config);

/// Heights replaced by the lower-hull values at every point.
RationalVector convex_envelope(const PointConfiguration& config, const RationalVector& heights);

/// Lattice points of conv(A), lexicographically sorted.
std::vector<IntVector> lattice_points(const LatticePolytope& q);

/// Exact integrals of the PL function with the given values at the points of
/// config, affine on each cell of t.  Throws Error(LinearityViolation) when a
/// point inside a cell disagrees with the cell's interpolation.
Rational integral_over_Q(const PointConfiguration& config, const RationalVector& values, const Triangulation& t);
Rational boundary_integral(const PointConfiguration& config, const RationalVector& values, const Triangulation& t);

/// L(f) = int_{dQ} f dnu - n (vol(dQ)/vol(Q)) int_Q f dx
Rational k_energy_integral(const PLFunction& f, const PointConfiguration& config);

/// <f, n deg(D) eta_n - (n+1) deg(R) xi> / ((n+1)! vol(Q)) on the induced
/// triangulation.
Rational k_energy_pairing(const PLFunction& f, const PointConfiguration& config);
/// Same pairing on a caller-supplied triangulation of induced.config.
/// Throws Error(TriangulationMismatch) unless f is affine on every cell.
Rational k_energy_pairing(const InducedTriangulation& induced, const Triangulation& t);

/// Random heights in [-range, range] with denominators up to `denominator`,
/// replaced by their convex envelope.
RationalVector random_convex_heights(const PointConfiguration& config, std::mt19937_64& rng, long range = 20,
                                     long denominator = 7);

}  // namespace hurwitz

#endif
