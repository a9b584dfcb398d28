#pragma once

#include <optional>

#include "ripple/ripple_field.hpp"
#include "ripple/visibility.hpp"

namespace ripple {

struct AgentState {
    Coord pos;
    Heading heading = Heading::East;
    std::uint64_t steps_taken = 0;

    bool operator==(const AgentState&) const = default;
};

// Thrown when a step targets an untraversable or out-of-bounds cell.
// The policy never produces one; seeing this means an engine bug.
struct BlockedStep : std::logic_error {
    using std::logic_error::logic_error;
};

// Greedy policy: pick the traversable neighbor with the lowest field value
// (unreached = infinity), ties broken by the fixed neighbor order
// up, right, down, left. nullopt means there is nothing left to chase:
// every traversable neighbor is unreached and the agent's own cell is
// unreached too (or the field is complete).
std::optional<Heading> choose_step(const GridMap& map,
                                   const DistanceField& field,
                                   const AgentState& state);

// Move one cell in dir; heading snaps to dir, turning is free.
AgentState apply_step(const GridMap& map, const AgentState& state, Heading dir);

}  // namespace ripple
