#pragma once
// PathResult shared by every planner, plus the common validity checker the
// differential tests compare against.

#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "erastar/grid.hpp"
#include "erastar/sqrt2.hpp"

namespace erastar {

struct InvalidEndpoint : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Predecessor walk hit a cycle or a missing link; indicates corrupted
// search state and must never fire on a state a planner produced.
struct BrokenChain : std::logic_error {
    using std::logic_error::logic_error;
};

struct PathResult {
    std::vector<Cell> path;  // start..goal inclusive; empty on failure
    std::int64_t orth_steps = 0;
    std::int64_t diag_steps = 0;
    // orth + diag*sqrt(2), the sqrt applied in one final multiplication.
    double length = std::numeric_limits<double>::infinity();
    bool fail = true;
    std::uint64_t nb_iter = 0;  // expansions the producing search used

    Sqrt2 exact_length() const { return {orth_steps, diag_steps}; }
};

// Walks a packed predecessor array backward from goal to start and builds
// the forward path. `reached` short-circuits the failure case.
PathResult trace_path(const std::vector<std::int32_t>& pred, int width, int height,
                      Cell start, Cell goal, bool reached, std::uint64_t nb_iter);

// Returns an empty string when `r` satisfies the PathResult contract for
// (map, start, goal), else a description of the first violation. Checks
// endpoints, per-step G8 adjacency under the map's corner rule, freeness,
// step counts, and the length arithmetic.
std::string validate_path(const GridMap& map, const PathResult& r, Cell start, Cell goal);

}  // namespace erastar
