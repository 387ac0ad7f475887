// Breadth-first enumeration of all regular triangulations over the flip graph.

#ifndef HURWITZ_ENUMERATION_HPP
#define HURWITZ_ENUMERATION_HPP

#include "hurwitz/triangulation.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hurwitz {

struct EnumerationOptions {
    std::size_t jobs = 1;
    /// Maximum number of regular triangulations; exceeding it throws
    /// Error(BudgetExceeded).
    std::size_t budget = 2'000'000;
    /// When nonempty, state is flushed here and an existing file is resumed.
    std::string checkpoint;
    std::size_t checkpoint_interval = 20'000;
    /// Stop (with a flushed checkpoint) once this many regular triangulations
    /// are known; 0 disables.  Simulates an interrupted run.
    std::size_t stop_after = 0;
    /// Starting triangulation; the placing triangulation when absent.
    std::optional<Triangulation> seed;
};

struct EnumerationResult {
    std::vector<Triangulation> triangulations;  // canonical order
    bool complete = true;
    std::size_t regularity_tests = 0;
};

EnumerationResult enumerate_regular(const TriangulationContext& ctx, const EnumerationOptions& options = {});
EnumerationResult enumerate_regular(const PointConfiguration& config, const EnumerationOptions& options = {});

}  // namespace hurwitz

#endif
