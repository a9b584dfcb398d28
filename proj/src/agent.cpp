#include "ripple/agent.hpp"

namespace ripple {

std::optional<Heading> choose_step(const GridMap& map,
                                   const DistanceField& field,
                                   const AgentState& state) {
    static constexpr Heading order[4] = {Heading::North, Heading::East,
                                         Heading::South, Heading::West};
    std::optional<Heading> best_dir;
    std::int32_t best_value = DistanceField::kUnreached;
    bool any_traversable = false;

    for (Heading dir : order) {
        const Coord d = heading_vector(dir);
        const Coord n{state.pos.x + d.x, state.pos.y + d.y};
        if (!map.in_bounds(n) || map.at_unchecked(n) == CellState::Untraversable)
            continue;
        any_traversable = true;
        // unseen cells are sources: worth 0 no matter what the field holds
        const std::int32_t v =
            map.at_unchecked(n) == CellState::Unseen ? 0 : field.at(n);
        if (v < best_value) {
            best_value = v;
            best_dir = dir;
        }
    }

    if (best_dir)
        return best_dir;

    // Every traversable neighbor is unreached (or there is none).
    const bool own_unreached =
        field.at(state.pos) == DistanceField::kUnreached;
    if (!any_traversable || own_unreached || field.complete)
        return std::nullopt;
    // Transient sweeps-mode state: own cell reads 0 while the halo around it
    // is still unreached. Keep moving rather than stalling.
    for (Heading dir : order) {
        const Coord d = heading_vector(dir);
        const Coord n{state.pos.x + d.x, state.pos.y + d.y};
        if (map.in_bounds(n) && map.at_unchecked(n) != CellState::Untraversable)
            return dir;
    }
    return std::nullopt;
}

AgentState apply_step(const GridMap& map, const AgentState& state, Heading dir) {
    const Coord d = heading_vector(dir);
    const Coord target{state.pos.x + d.x, state.pos.y + d.y};
    if (!map.in_bounds(target) ||
        map.at_unchecked(target) == CellState::Untraversable)
        throw BlockedStep("apply_step: target cell blocked");
    return {target, dir, state.steps_taken + 1};
}

}  // namespace ripple
