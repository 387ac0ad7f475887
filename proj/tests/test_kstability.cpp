#include "hurwitz/error.hpp"
#include "hurwitz/fixtures.hpp"
#include "hurwitz/kstability.hpp"
#include "hurwitz/triangulation.hpp"

#include <doctest.h>

#include <random>

using namespace hurwitz;

namespace {

ErrorCode code_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::InvalidArgument;
}

RationalVector rv(std::initializer_list<Rational> xs) { return RationalVector(xs); }

AffinePiece piece(std::initializer_list<Rational> slope, Rational c) { return {RationalVector(slope), c}; }

// max(0, x + y - 1)
PLFunction corner() { return PLFunction::from_affine({piece({0, 0}, 0), piece({1, 1}, -1)}); }

}  // namespace

TEST_CASE("induced triangulations")
{
    auto square = fixture("square").config();
    auto induced = induced_triangulation(corner(), square);
    CHECK(induced.dilation == 1);
    CHECK(induced.triangulation.encode() == "1,2,4;2,3,4");
    CHECK(induced.values == rv({0, 0, 1, 0}));

    auto heights = induced_triangulation(PLFunction::from_heights(rv({0, 1, 0, 1})), square);
    CHECK(heights.triangulation.encode() == "1,2,3;1,3,4");

    auto affine = induced_triangulation(PLFunction::from_affine({piece({2, 3}, 1)}), square);
    CHECK(is_regular(square, affine.triangulation).regular());

    // max(2x - 1, 0) breaks along x = 1/2, which needs the doubled square.
    auto half = induced_triangulation(PLFunction::from_affine({piece({2, 0}, -1), piece({0, 0}, 0)}), square);
    CHECK(half.dilation == 2);
    CHECK(half.config.size() == 9);
    CHECK(is_regular(half.config, half.triangulation).regular());
}

TEST_CASE("integrals")
{
    auto hexagon = fixture("hexagon").config();
    auto hex_t = induced_triangulation(PLFunction::from_affine({piece({0, 0}, 1)}), hexagon);
    CHECK(integral_over_Q(hexagon, hex_t.values, hex_t.triangulation) == 3);
    CHECK(boundary_integral(hexagon, hex_t.values, hex_t.triangulation) == 6);

    auto square = fixture("square").config();
    auto x = induced_triangulation(PLFunction::from_affine({piece({1, 0}, 0)}), square);
    CHECK(integral_over_Q(square, x.values, x.triangulation) == Rational(1, 2));
    CHECK(boundary_integral(square, x.values, x.triangulation) == 2);

    auto c = induced_triangulation(corner(), square);
    CHECK(integral_over_Q(square, c.values, c.triangulation) == Rational(1, 6));
    CHECK(boundary_integral(square, c.values, c.triangulation) == 1);

    // A centered affine function on a centrally symmetric polygon.
    auto centered = induced_triangulation(PLFunction::from_affine({piece({3, -2}, 0)}), hexagon);
    CHECK(integral_over_Q(hexagon, centered.values, centered.triangulation) == 0);
    CHECK(boundary_integral(hexagon, centered.values, centered.triangulation) == 0);
}

TEST_CASE("K-energy examples")
{
    auto square = fixture("square").config();
    auto hexagon = fixture("hexagon").config();
    CHECK(k_energy_integral(corner(), square) == Rational(1, 3));
    CHECK(k_energy_pairing(corner(), square) == Rational(1, 3));
    auto lifted = PLFunction::from_heights(rv({0, 1, 0, 1}));
    CHECK(k_energy_integral(lifted, square) == Rational(2, 3));
    CHECK(k_energy_pairing(lifted, square) == k_energy_integral(lifted, square));
    auto half = PLFunction::from_affine({piece({2, 0}, -1), piece({0, 0}, 0)});
    CHECK(k_energy_integral(half, square) == Rational(1, 2));
    CHECK(k_energy_pairing(half, square) == Rational(1, 2));

    for (const auto& config : {square, hexagon}) {
        auto constant = PLFunction::from_affine({piece({0, 0}, Rational(7, 3))});
        CHECK(k_energy_integral(constant, config) == 0);
        CHECK(k_energy_pairing(constant, config) == 0);
    }
    auto affine = PLFunction::from_affine({piece({1, -4}, Rational(5, 2))});
    CHECK(k_energy_integral(affine, hexagon) == 0);
    CHECK(k_energy_pairing(affine, hexagon) == 0);
}

TEST_CASE("the pairing equals the integral on random convex functions")
{
    std::mt19937_64 rng(2024);
    for (const char* name : {"square", "veronese", "hexagon", "4c", "5b"}) {
        auto config = fixture(name).config();
        for (int round = 0; round < 20; ++round) {
            auto f = PLFunction::from_heights(random_convex_heights(config, rng));
            auto direct = k_energy_integral(f, config);
            CAPTURE(name);
            CHECK(k_energy_pairing(f, config) == direct);
            CHECK(k_energy_integral(f.scaled(Rational(5, 3)), config) == Rational(5, 3) * direct);
            CHECK(k_energy_integral(f.shifted(Rational(-9, 4)), config) == direct);
        }
    }
}

TEST_CASE("the pairing does not depend on the refinement")
{
    auto square = fixture("square").config();
    // An affine function is linear on every cell of both square triangulations.
    auto f = PLFunction::from_affine({piece({1, 2}, 3)});
    auto induced = induced_triangulation(f, square);
    auto a = k_energy_pairing(induced, Triangulation::decode("1,2,3;1,3,4"));
    auto b = k_energy_pairing(induced, Triangulation::decode("1,2,4;2,3,4"));
    CHECK(a == b);

    // |x| on the hexagon folds along the vertical line through the center.
    auto hexagon = fixture("hexagon").config();
    auto fold = PLFunction::from_affine({piece({1, 0}, 0), piece({-1, 0}, 0)});
    auto hi = induced_triangulation(fold, hexagon);
    auto other = validate(hexagon, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 6, 7}, {1, 7, 2}});
    CHECK(k_energy_pairing(hi, hi.triangulation) == k_energy_pairing(hi, other));
    CHECK(k_energy_pairing(hi, other) == k_energy_integral(fold, hexagon));
}

TEST_CASE("K-energy errors")
{
    auto square = fixture("square").config();
    // The center of the hexagon lifted above its lower hull.
    auto concave = PLFunction::from_heights(rv({5, 0, 0, 0, 0, 0, 0}));
    CHECK(code_of([&] { induced_triangulation(concave, fixture("hexagon").config()); }) == ErrorCode::NonConvex);
    auto wrong_size = PLFunction::from_heights(rv({0, 0, 0}));
    CHECK(code_of([&] { induced_triangulation(wrong_size, square); }) == ErrorCode::InvalidArgument);

    auto induced = induced_triangulation(corner(), square);
    CHECK(code_of([&] { k_energy_pairing(induced, Triangulation::decode("1,2,3;1,3,4")); }) ==
          ErrorCode::TriangulationMismatch);

    // Values at an interior point that disagree with the cell's interpolation.
    PointConfiguration big({{0, 0}, {2, 0}, {0, 2}, {1, 1}});
    auto t = Triangulation::decode("1,2,3");
    CHECK(code_of([&] { integral_over_Q(big, rv({0, 0, 0, 1}), t); }) == ErrorCode::LinearityViolation);
    CHECK(integral_over_Q(big, rv({0, 2, 2, 2}), t) == Rational(8, 3));

    // A non-canonical multiplier must not break exact comparisons.
    auto tied = PLFunction::from_heights(rv({Rational(-63, 4), -18, -13, -19, Rational(-37, 2)}));
    CHECK_NOTHROW(induced_triangulation(tied.scaled(Rational(14, 7)), fixture("4c").config()));
    CHECK(k_energy_integral(tied.shifted(Rational(6, 3)), fixture("4c").config()) ==
          k_energy_integral(tied, fixture("4c").config()));

    CHECK_THROWS_AS(PLFunction::from_affine({}), Error);
    CHECK_THROWS_AS(corner().scaled(-1), Error);
    CHECK_THROWS_AS(PLFunction::from_heights(rv({0, 1}))(rv({0, 0})), Error);
}

TEST_CASE("convex envelope and lattice points")
{
    auto square = fixture("square").config();
    CHECK(convex_envelope(square, rv({0, 0, 0, 5})) == rv({0, 0, 0, 5}));
    CHECK(convex_envelope(fixture("hexagon").config(), rv({5, 0, 2, 0, 0, 0, 0})) == rv({0, 0, 2, 0, 0, 0, 0}));
    CHECK(convex_envelope(square, rv({0, 1, 0, 1})) == rv({0, 1, 0, 1}));
    auto pts = lattice_points(convex_hull(fixture("triangle4").points));
    CHECK(pts.size() == 6);
    CHECK(pts.front() == IntVector{0, 0});
    CHECK(lattice_points(convex_hull(fixture("hexagon").points)).size() == 7);
}
