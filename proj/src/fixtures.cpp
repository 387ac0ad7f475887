#include "hurwitz/fixtures.hpp"

#include "hurwitz/error.hpp"

namespace hurwitz {

namespace {

std::vector<Fixture> build()
{
    std::vector<Fixture> out;
    auto add = [&](std::string name, std::string description, std::vector<IntVector> points,
                   std::optional<ReflexiveRow> row = std::nullopt) {
        out.push_back({std::move(name), std::move(description), std::move(points), row});
    };
    const std::vector<IntVector> hexagon{{0, 0}, {0, 1}, {1, 1}, {1, 0}, {0, -1}, {-1, -1}, {-1, 0}};

    add("square", "unit square, the Segre surface P1 x P1", {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    add("veronese", "twice the unit triangle, the Veronese surface", {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}});
    add("hexagon", "P2 blown up in three points", hexagon);
    add("triangle", "unit triangle", {{0, 0}, {1, 0}, {0, 1}});
    add("triangle4", "triangle of normalized volume 4, vertices only", {{0, 0}, {2, 0}, {0, 2}});

    add("3", "reflexive triangle with 3 boundary points", {{0, 0}, {-1, -1}, {1, 0}, {0, 1}},
        ReflexiveRow{2, 84, 2, true, false});
    add("4a", "reflexive square with 4 boundary points", {{0, 0}, {-1, 0}, {0, -1}, {1, 0}, {0, 1}},
        ReflexiveRow{3, 544, 3, true, false});
    add("4b", "reflexive quadrilateral with 4 boundary points", {{0, 0}, {-1, -1}, {1, 0}, {0, 1}, {-1, 0}},
        ReflexiveRow{4, 1270, 4, true, false});
    add("4c", "reflexive triangle with 4 boundary points", {{0, 0}, {-2, -1}, {1, 0}, {0, 1}, {-1, 0}},
        ReflexiveRow{4, 844, 4, true, false});
    add("5a", "reflexive pentagon", {{0, 0}, {-1, -1}, {0, -1}, {1, 0}, {0, 1}, {-1, 0}},
        ReflexiveRow{10, 26540, 10, true, false});
    add("5b", "reflexive quadrilateral with 5 boundary points", {{0, 0}, {-1, -1}, {0, -1}, {1, -1}, {0, 1}, {-1, 0}},
        ReflexiveRow{12, 33380, 12, true, false});
    add("6a", "reflexive hexagon", hexagon, ReflexiveRow{32, 928930, 32, true, true});
    add("6b", "reflexive pentagon with 6 boundary points",
        {{0, 0}, {-1, -1}, {0, -1}, {1, -1}, {1, 0}, {0, 1}, {-1, 0}}, ReflexiveRow{35, 980824, 35, true, true});
    add("6c", "reflexive quadrilateral with 6 boundary points",
        {{0, 0}, {-2, -1}, {-1, -1}, {0, -1}, {1, 0}, {0, 1}, {-1, 0}}, ReflexiveRow{35, 980824, 35, true, true});
    add("6d", "reflexive triangle with 6 boundary points",
        {{0, 0}, {-2, -1}, {-1, -1}, {0, -1}, {1, -1}, {0, 1}, {-1, 0}}, ReflexiveRow{32, 696710, 32, true, true});
    return out;
}

}  // namespace

const std::vector<Fixture>& fixtures()
{
    static const std::vector<Fixture> all = build();
    return all;
}

const Fixture& fixture(const std::string& name)
{
    for (const auto& f : fixtures())
        if (f.name == name)
            return f;
    throw Error(ErrorCode::BadConfig, "unknown fixture '" + name + "'");
}

std::vector<std::string> fixture_names()
{
    std::vector<std::string> out;
    for (const auto& f : fixtures())
        out.push_back(f.name);
    return out;
}

std::vector<const Fixture*> reflexive_fixtures()
{
    std::vector<const Fixture*> out;
    for (const auto& f : fixtures())
        if (f.reflexive)
            out.push_back(&f);
    return out;
}

}  // namespace hurwitz
