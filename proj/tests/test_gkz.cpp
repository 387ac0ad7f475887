#include "oracles.hpp"

#include "hurwitz/enumeration.hpp"
#include "hurwitz/error.hpp"
#include "hurwitz/fixtures.hpp"
#include "hurwitz/gkz.hpp"
#include "hurwitz/prism.hpp"
#include "hurwitz/weight_polytopes.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace hurwitz;

namespace {

std::vector<Triangulation> enumerate(const PointConfiguration& config)
{
    return enumerate_regular(config).triangulations;
}

std::set<IntVector> hurwitz_set(const PointConfiguration& config)
{
    WeightCalculator w(config);
    std::set<IntVector> out;
    for (const auto& t : enumerate(config))
        out.insert(w.hurwitz(t).values);
    return out;
}

Int sum(const IntVector& v)
{
    Int s = 0;
    for (Int x : v)
        s += x;
    return s;
}

}  // namespace

TEST_CASE("square weight vectors")
{
    auto config = fixture("square").config();
    auto t1 = Triangulation::decode("1,2,3;1,3,4");
    auto t2 = Triangulation::decode("1,2,4;2,3,4");
    CHECK(eta_k(config, t1, 2).values == IntVector{2, 1, 2, 1});
    CHECK(eta_k(config, t1, 1).values == IntVector{2, 2, 2, 2});
    CHECK(eta_k(config, t1, 0).values == IntVector{1, 1, 1, 1});
    CHECK(gkz_vector(config, t1).values == IntVector{2, 1, 2, 1});
    CHECK(massive_gkz(config, t1).values == IntVector{1, 0, 1, 0});
    CHECK(hurwitz_vector(config, t1).values == IntVector{2, 0, 2, 0});
    CHECK(hurwitz_vector(config, t2).values == IntVector{0, 2, 0, 2});
    CHECK(hurwitz_vector(config, t1).kind == WeightKind::Hurwitz);
    CHECK(to_string(WeightKind::Massive) == "massive");
}

TEST_CASE("massive simplices")
{
    auto config = fixture("square").config();
    CHECK(is_massive(config, cell_from_indices({0, 1, 2})));
    CHECK(is_massive(config, cell_from_indices({0, 1})));
    CHECK(is_massive(config, cell_from_indices({3})));
    CHECK_FALSE(is_massive(config, cell_from_indices({0, 2})));

    auto hexagon = fixture("hexagon").config();
    CHECK_FALSE(is_massive(hexagon, cell_from_indices({0})));
    CHECK_FALSE(is_massive(hexagon, cell_from_indices({0, 1})));
    CHECK(is_massive(hexagon, cell_from_indices({1, 2})));

    // A segment on an edge of length two is massive, its halves too.
    auto veronese = fixture("veronese").config();
    CHECK(is_massive(veronese, cell_from_indices({0, 2})));
    CHECK(is_massive(veronese, cell_from_indices({0, 1})));
    CHECK_FALSE(is_massive(veronese, cell_from_indices({1, 3})));
    CHECK_FALSE(is_massive(veronese, cell_from_indices({4})));
}

TEST_CASE("single triangle")
{
    auto config = fixture("triangle").config();
    auto t = Triangulation::decode("1,2,3");
    CHECK(massive_gkz(config, t).values == IntVector{0, 0, 0});
    CHECK(hurwitz_vector(config, t).values == IntVector{0, 0, 0});
    auto big = fixture("triangle4").config();
    CHECK(gkz_vector(big, t).values == IntVector{4, 4, 4});
    CHECK(hurwitz_vector(big, t).values == IntVector{4, 4, 4});
}

TEST_CASE("Veronese Hurwitz vectors")
{
    std::set<IntVector> expected{
        {4, 0, 1, 0, 6, 1}, {3, 2, 0, 0, 6, 1}, {3, 0, 1, 2, 6, 0}, {2, 2, 0, 2, 6, 0}, {1, 0, 4, 6, 0, 1},
        {0, 2, 3, 6, 0, 1}, {1, 0, 3, 6, 2, 0}, {0, 2, 2, 6, 2, 0}, {1, 6, 1, 0, 0, 4}, {0, 6, 1, 2, 0, 3},
        {1, 6, 0, 0, 2, 3}, {0, 6, 0, 2, 2, 2}, {4, 0, 4, 0, 0, 4}, {0, 4, 0, 4, 4, 0},
    };
    CHECK(hurwitz_set(fixture("veronese").config()) == expected);
}

TEST_CASE("hexagon Hurwitz vectors")
{
    std::set<IntVector> expected{
        {12, 2, 2, 2, 2, 2, 2}, {10, 0, 4, 2, 2, 2, 4}, {10, 2, 2, 2, 4, 0, 4}, {10, 2, 2, 4, 0, 4, 2},
        {10, 2, 4, 0, 4, 2, 2}, {10, 4, 0, 4, 2, 2, 2}, {10, 4, 2, 2, 2, 4, 0}, {8, 0, 4, 2, 4, 0, 6},
        {8, 0, 4, 4, 0, 4, 4},  {8, 0, 6, 0, 4, 2, 4},  {8, 2, 4, 0, 6, 0, 4},  {8, 4, 0, 4, 4, 0, 4},
        {8, 4, 0, 6, 0, 4, 2},  {8, 4, 2, 4, 0, 6, 0},  {8, 4, 4, 0, 4, 4, 0},  {8, 6, 0, 4, 2, 4, 0},
        {6, 0, 6, 0, 6, 0, 6},  {6, 6, 0, 6, 0, 6, 0},  {0, 0, 4, 6, 4, 0, 10}, {0, 0, 4, 8, 0, 4, 8},
        {0, 0, 8, 4, 0, 8, 4},  {0, 0, 8, 0, 8, 0, 8},  {0, 0, 10, 0, 4, 6, 4}, {0, 4, 0, 8, 4, 0, 8},
        {0, 4, 0, 10, 0, 4, 6}, {0, 4, 6, 4, 0, 10, 0}, {0, 4, 8, 0, 4, 8, 0}, {0, 6, 4, 0, 10, 0, 4},
        {0, 8, 0, 4, 8, 0, 4},  {0, 8, 0, 8, 0, 8, 0},  {0, 8, 4, 0, 8, 4, 0},  {0, 10, 0, 4, 6, 4, 0},
    };
    REQUIRE(expected.size() == 32);
    CHECK(hurwitz_set(fixture("hexagon").config()) == expected);
}

TEST_CASE("weight vector sum identities on every fixture")
{
    for (const auto& fx : fixtures()) {
        if (fx.reflexive && fx.reflexive->extended && fx.name != "6a")
            continue;
        auto config = fx.config();
        auto q = convex_hull(config.points());
        const Int vol = lattice_volume(q);
        const Int vol_boundary = boundary_volume(q);
        const Int degree = hurwitz_degree_formula(q);
        WeightCalculator w(config);
        std::set<IntVector> xis;
        for (const auto& t : enumerate(config)) {
            auto eta2 = w.eta(t, 2).values;
            auto eta1 = w.eta(t, 1).values;
            auto eta0 = w.eta(t, 0).values;
            auto xi = w.hurwitz(t).values;
            CAPTURE(fx.name);
            CAPTURE(t.encode());
            CHECK(eta2 == oracle::gkz_by_hand(config, t));
            CHECK(sum(eta2) == 3 * vol);
            CHECK(sum(eta1) == 2 * vol_boundary);
            CHECK(sum(xi) == 2 * degree);
            CHECK(std::all_of(xi.begin(), xi.end(), [](Int x) { return x >= 0; }));
            // Every vertex of Q is a massive point of every triangulation.
            CHECK(sum(eta0) == static_cast<Int>(q.vertices().size()));
            xis.insert(xi);
        }
        // Distinct triangulations have distinct Hurwitz vectors.
        CHECK(xis.size() == enumerate(config).size());
    }
}

TEST_CASE("Hurwitz degree formula")
{
    CHECK(hurwitz_degree_formula(convex_hull(fixture("square").points)) == 2);
    CHECK(hurwitz_degree_formula(convex_hull(fixture("veronese").points)) == 6);
    CHECK(hurwitz_degree_formula(convex_hull(fixture("hexagon").points)) == 12);
}

TEST_CASE("weight vectors in three dimensions")
{
    auto cube = prism_configuration(fixture("square").config());
    WeightCalculator w(cube);
    auto q = convex_hull(cube.points());
    for (const auto& t : enumerate(cube)) {
        CHECK(sum(w.eta(t, 3).values) == 4 * lattice_volume(q));
        CHECK(sum(w.eta(t, 2).values) == 3 * boundary_lattice_volume(q));
        CHECK(sum(w.eta(t, 0).values) == 8);
    }
    CHECK_THROWS_AS(w.eta(Triangulation::decode("1,2,3,5"), 4), Error);
}
