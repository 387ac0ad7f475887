// Built-in point configurations.

#ifndef HURWITZ_FIXTURES_HPP
#define HURWITZ_FIXTURES_HPP

#include "hurwitz/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hurwitz {

/// Published counts for a reflexive polygon.
struct ReflexiveRow {
    std::size_t triangulations = 0;
    std::size_t prism_triangulations = 0;
    std::size_t hurwitz_vertices = 0;
    bool normally_equivalent = true;
    /// Rows beyond desk scale run only on request.
    bool extended = false;
};

struct Fixture {
    std::string name;
    std::string description;
    std::vector<IntVector> points;
    std::optional<ReflexiveRow> reflexive;

    PointConfiguration config() const { return PointConfiguration(points, name); }
};

const std::vector<Fixture>& fixtures();
/// Throws Error(BadConfig) for an unknown name.
const Fixture& fixture(const std::string& name);
std::vector<std::string> fixture_names();
/// The reflexive polygons in table order.
std::vector<const Fixture*> reflexive_fixtures();

}  // namespace hurwitz

#endif
