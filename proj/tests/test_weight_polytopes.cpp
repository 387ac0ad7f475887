#include "hurwitz/enumeration.hpp"
#include "hurwitz/error.hpp"
#include "hurwitz/fixtures.hpp"
#include "hurwitz/gkz.hpp"
#include "hurwitz/prism.hpp"
#include "hurwitz/weight_polytopes.hpp"

#include <doctest.h>

#include <algorithm>

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

std::vector<IntVector> scaled(const std::vector<IntVector>& vs, Int s)
{
    auto out = vs;
    for (auto& v : out)
        for (auto& x : v)
            x *= s;
    return out;
}

}  // namespace

TEST_CASE("square polytopes")
{
    auto square = fixture("square").config();
    auto chow = secondary_polytope(square);
    CHECK(chow.kind == PolytopeKind::Chow);
    CHECK(chow.vertices == std::vector<IntVector>{{1, 2, 1, 2}, {2, 1, 2, 1}});
    CHECK(chow.polytope.dim() == 1);
    CHECK(chow.sources.at({2, 1, 2, 1}) == std::vector<std::string>{"1,2,3;1,3,4"});
    auto xi = hurwitz_candidate_polytope(square);
    CHECK(xi.vertices == std::vector<IntVector>{{0, 2, 0, 2}, {2, 0, 2, 0}});
    auto nu = prism_hurwitz_polytope(square);
    CHECK(nu.triangulations == 74);
    CHECK(nu.vertices == xi.vertices);
    CHECK(std::find(nu.generators.begin(), nu.generators.end(), IntVector{1, 1, 1, 1}) != nu.generators.end());
    CHECK(normally_equivalent(chow.polytope, xi.polytope));
    CHECK(to_string(PolytopeKind::PrismHurwitz) == "prism-hurwitz");
}

TEST_CASE("vertex counts")
{
    CHECK(secondary_polytope(fixture("veronese").config()).vertices.size() == 14);
    CHECK(secondary_polytope(fixture("hexagon").config()).vertices.size() == 32);
    CHECK(hurwitz_candidate_polytope(fixture("hexagon").config()).vertices.size() == 32);
    CHECK(prism_hurwitz_polytope(fixture("3").config()).vertices.size() == 2);
}

TEST_CASE("degrees")
{
    CHECK(degree_from_polytope(hurwitz_candidate_polytope(fixture("hexagon").config()), 2) == 12);
    CHECK(degree_from_polytope(secondary_polytope(fixture("square").config()), 3) == 2);
    CHECK(degree_from_polytope(hurwitz_candidate_polytope(fixture("veronese").config()), 2) == 6);
    CHECK(code_of([] { degree_from_polytope(secondary_polytope(fixture("square").config()), 4); }) ==
          ErrorCode::InvalidArgument);
    auto uneven = assemble_polytope(PolytopeKind::Chow, {{{1, 0}, "a"}, {{2, 0}, "b"}});
    CHECK(code_of([&] { degree_from_polytope(uneven, 1); }) == ErrorCode::NonconstantSum);
    for (const auto& fx : fixtures()) {
        auto q = convex_hull(fx.points);
        CHECK(hurwitz_degree_formula(q) == 3 * lattice_volume(q) - boundary_volume(q));
    }
    CHECK(hurwitz_degree_formula(convex_hull(fixture("hexagon").points)) == 12);
    CHECK(hurwitz_degree_formula(convex_hull(fixture("square").points)) == 2);
    CHECK(hurwitz_degree_formula(convex_hull(fixture("veronese").points)) == 6);
}

TEST_CASE("boundary lattice volume in three dimensions")
{
    auto cube = convex_hull(prism_configuration(fixture("square").config()).points());
    CHECK(boundary_lattice_volume(cube) == 12);
    auto hexprism = convex_hull(prism_configuration(fixture("hexagon").config()).points());
    CHECK(boundary_lattice_volume(hexprism) == 6 + 6 + 6 * 2);
    CHECK(boundary_lattice_volume(convex_hull(fixture("hexagon").points)) == 6);
}

TEST_CASE("projection")
{
    CHECK(project_pi({3, 3, 3, 3}) == IntVector{0, 0, 0});
    CHECK(project_pi({2, 0, 2, 0}) == IntVector{2, 0, 2});
    CHECK(project_pi({5, 1, 7}) == project_pi({6, 2, 8}));
    CHECK_THROWS_AS(project_pi({}), Error);
}

TEST_CASE("inclusion")
{
    auto p = convex_hull(std::vector<IntVector>{{0, 0}, {2, 0}, {0, 2}});
    auto q = convex_hull(std::vector<IntVector>{{0, 0}, {4, 0}, {0, 4}});
    auto r = convex_hull(std::vector<IntVector>{{-1, -1}, {9, 0}, {0, 9}});
    CHECK(inclusion(p, p));
    CHECK(inclusion(p, q));
    CHECK(inclusion(q, r));
    CHECK(inclusion(p, r));
    CHECK_FALSE(inclusion(q, p));
    auto segment = convex_hull(std::vector<IntVector>{{0, 0}, {2, 2}});
    auto midpoint = convex_hull(std::vector<IntVector>{{1, 1}});
    CHECK_FALSE(inclusion(segment, midpoint));
    CHECK(inclusion(midpoint, segment));
}

TEST_CASE("vertex and edge correspondence")
{
    auto hex = secondary_polytope(fixture("hexagon").config()).polytope;
    auto twice = convex_hull(scaled(secondary_polytope(fixture("hexagon").config()).vertices, 2));
    CHECK(vertex_edge_correspondence(hex, twice).bijective());

    auto square_chow = secondary_polytope(fixture("square").config()).polytope;
    auto square_xi = hurwitz_candidate_polytope(fixture("square").config()).polytope;
    auto c = vertex_edge_correspondence(square_chow, square_xi);
    CHECK(c.bijective());
    CHECK(c.edges_a == 1);

    for (const char* name : {"veronese", "hexagon", "4b", "5b"}) {
        auto config = fixture(name).config();
        auto corr = vertex_edge_correspondence(secondary_polytope(config).polytope,
                                               hurwitz_candidate_polytope(config).polytope);
        CAPTURE(name);
        CHECK(corr.bijective());
        CHECK(normally_equivalent(secondary_polytope(config).polytope, hurwitz_candidate_polytope(config).polytope));
    }

    auto triangle = convex_hull(std::vector<IntVector>{{0, 0}, {1, 0}, {0, 1}});
    auto square = convex_hull(std::vector<IntVector>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    CHECK_FALSE(vertex_edge_correspondence(triangle, square).bijective());
}

TEST_CASE("conjecture reports")
{
    auto square = check_conjecture(fixture("square").config());
    CHECK(square.triangulations == 2);
    CHECK(square.prism_triangulations == 74);
    CHECK(square.hurwitz_vertices == 2);
    CHECK(square.normally_equivalent);
    CHECK(square.vertices_match);
    CHECK(square.xi_in_nu_hull);

    auto r = check_conjecture(fixture("4b").config());
    CHECK(r.triangulations == 4);
    CHECK(r.prism_triangulations == 1270);
    CHECK(r.hurwitz_vertices == 4);
    CHECK(r.normally_equivalent);
    CHECK(r.vertices_match);
}

TEST_CASE("incomplete enumerations are refused")
{
    EnumerationOptions options;
    options.budget = 10;
    CHECK(code_of([&] { prism_hurwitz_polytope(fixture("square").config(), options); }) ==
          ErrorCode::BudgetExceeded);
    CHECK(code_of([] { hurwitz_candidate_polytope(prism_configuration(fixture("square").config())); }) ==
          ErrorCode::DimensionUnsupported);
}

TEST_CASE("K-semistability reports")
{
    auto square = k_semistable(fixture("square").config());
    CHECK(square.chow_degree == 2);
    CHECK(square.hurwitz_degree == 2);
    CHECK(square.semistable);
    auto hexagon = k_semistable(fixture("hexagon").config());
    CHECK(hexagon.chow_degree == 6);
    CHECK(hexagon.hurwitz_degree == 12);
    CHECK_FALSE(hexagon.semistable);
}
