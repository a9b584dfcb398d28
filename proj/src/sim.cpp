#include "ripple/sim.hpp"

namespace ripple {

Simulation::Simulation(GridMap map, Coord start, Heading heading,
                       SimConfig config)
    : map_(std::move(map)),
      reachable_(reachable_set(map_, start)),
      field_(map_.width(), map_.height()),
      state_{start, heading, 0},
      config_(config) {
    max_ticks_ = config_.max_ticks != 0
                     ? config_.max_ticks
                     : 10ULL * static_cast<std::uint64_t>(reachable_.count());
    apply_vision(map_, state_.pos, state_.heading, config_.cone);
}

bool Simulation::reachable_covered() const {
    for (int y = 0; y < map_.height(); ++y)
        for (int x = 0; x < map_.width(); ++x)
            if (map_.at_unchecked({x, y}) == CellState::Unseen &&
                reachable_.contains({x, y}))
                return false;
    return true;
}

TickOutcome Simulation::tick() {
    ++ticks_;
    propagate(map_, field_, config_.field_mode);
    const std::optional<Heading> dir = choose_step(map_, field_, state_);
    if (dir)
        state_ = apply_step(map_, state_, *dir);
    // Refresh even without a move; new-pos vision otherwise.
    apply_vision(map_, state_.pos, state_.heading, config_.cone);
    if (reachable_covered())
        return TickOutcome::Done;
    return dir ? TickOutcome::Continue : TickOutcome::Stuck;
}

const DistanceField& Simulation::preview_field() {
    propagate(map_, field_, config_.field_mode);
    return field_;
}

EpisodeRecord run_episode(GridMap map, const std::string& map_id, Coord start,
                          Heading initial_heading, const SimConfig& config) {
    Simulation sim(std::move(map), start, initial_heading, config);
    EpisodeRecord rec;
    rec.map_id = map_id;
    rec.start = start;
    rec.seed = config.seed;
    if (config.record_trace)
        rec.trace.push_back({0, sim.coverage().unseen_percent});

    while (sim.ticks() < sim.max_ticks()) {
        const TickOutcome outcome = sim.tick();
        if (config.record_trace)
            rec.trace.push_back({sim.ticks(), sim.coverage().unseen_percent});
        if (outcome == TickOutcome::Done) {
            rec.completed = true;
            break;
        }
        if (outcome == TickOutcome::Stuck)
            break;
    }

    rec.total_steps = sim.state().steps_taken;
    const GridMap& final_map = sim.map();
    for (int y = 0; y < final_map.height(); ++y)
        for (int x = 0; x < final_map.width(); ++x)
            if (final_map.at_unchecked({x, y}) == CellState::Unseen &&
                !sim.reachable().contains({x, y}))
                ++rec.unreachable_unseen;
    return rec;
}

Coord random_start(const GridMap& map, Splitmix64& rng) {
    std::vector<Coord> traversable;
    traversable.reserve(map.cell_count());
    for (int y = 0; y < map.height(); ++y)
        for (int x = 0; x < map.width(); ++x)
            if (map.at_unchecked({x, y}) != CellState::Untraversable)
                traversable.push_back({x, y});
    if (traversable.empty())
        throw std::invalid_argument("random_start: map has no traversable cells");
    return traversable[rng.next() % traversable.size()];
}

}  // namespace ripple
