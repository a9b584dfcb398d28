#pragma once

#include <string>
#include <vector>

#include "ripple/agent.hpp"
#include "ripple/rng.hpp"

namespace ripple {

struct SimConfig {
    FovCone cone;
    FieldMode field_mode = FieldMode::fixpoint();
    // 0 means auto: 10 x reachable-cell count.
    std::uint64_t max_ticks = 0;
    // Drives random start selection only.
    std::uint64_t seed = 0;
    bool record_trace = false;
};

enum class TickOutcome : std::uint8_t { Continue, Done, Stuck };

struct TracePoint {
    std::uint64_t tick = 0;
    double unseen_percent = 0.0;

    bool operator==(const TracePoint&) const = default;
};

struct EpisodeRecord {
    std::string map_id;
    Coord start;
    std::uint64_t seed = 0;
    std::uint64_t total_steps = 0;
    bool completed = false;
    // Traversable cells outside the start's reachable component still unseen
    // at episode end. Excluded from the termination condition.
    int unreachable_unseen = 0;
    std::vector<TracePoint> trace;

    bool operator==(const EpisodeRecord&) const = default;
};

// One episode: owns a private map copy, the working field, the agent and the
// reachable component of the start cell. Termination is defined over that
// component. Tick order: propagate -> decide -> move -> see.
class Simulation {
public:
    // Marks the start cell seen and applies the initial cone.
    Simulation(GridMap map, Coord start, Heading heading, SimConfig config);

    TickOutcome tick();

    const GridMap& map() const { return map_; }
    const AgentState& state() const { return state_; }
    const DistanceField& field() const { return field_; }
    const CellSet& reachable() const { return reachable_; }
    std::uint64_t ticks() const { return ticks_; }
    std::uint64_t max_ticks() const { return max_ticks_; }

    CoverageStats coverage() const { return coverage_stats(map_, reachable_); }

    // Runs the tick's field refresh without moving the agent; the next tick
    // recomputes it anyway. Debug hook for field dumps.
    const DistanceField& preview_field();

private:
    bool reachable_covered() const;

    GridMap map_;
    CellSet reachable_;
    DistanceField field_;
    AgentState state_;
    SimConfig config_;
    std::uint64_t ticks_ = 0;
    std::uint64_t max_ticks_ = 0;
};

// Full episode loop: ticks until Done, Stuck, or max_ticks. total_steps
// counts node-to-node moves only. completed is true only when every
// reachable traversable cell ends up seen.
EpisodeRecord run_episode(GridMap map, const std::string& map_id, Coord start,
                          Heading initial_heading, const SimConfig& config);

// Uniform draw over traversable cells in row-major order.
Coord random_start(const GridMap& map, Splitmix64& rng);

}  // namespace ripple
