#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>

#include "ripple/io.hpp"
#include "ripple/sim.hpp"
#include "test_util.hpp"

using namespace ripple;

namespace {

SimConfig corridor_config() {
    SimConfig cfg;
    cfg.cone = {2.0, 45.0};
    cfg.record_trace = true;
    return cfg;
}

}  // namespace

TEST_CASE("hand-traced corridor episode") {
    // 1x5 corridor, start at x=0 facing east, range 2: the initial cone sees
    // x 0..2, then one step uncovers x=3 and a second uncovers x=4.
    const GridMap corridor(5, 1);
    const EpisodeRecord rec =
        run_episode(corridor, "corridor", {0, 0}, Heading::East, corridor_config());
    CHECK(rec.total_steps == 2);
    CHECK(rec.completed);
    CHECK(rec.unreachable_unseen == 0);
    REQUIRE(rec.trace.size() == 3);
    CHECK(rec.trace[0].unseen_percent == 40.0);
    CHECK(rec.trace[1].unseen_percent == 20.0);
    CHECK(rec.trace[2].unseen_percent == 0.0);
}

TEST_CASE("single-cell map completes with zero steps") {
    const EpisodeRecord rec =
        run_episode(GridMap(1, 1), "dot", {0, 0}, Heading::East, corridor_config());
    CHECK(rec.total_steps == 0);
    CHECK(rec.completed);
}

TEST_CASE("fully seen map is Done on the first tick without stepping") {
    const GridMap map = test::map_from_rows({"sss", "sss"});
    Simulation sim(map, {1, 0}, Heading::East, corridor_config());
    CHECK(sim.tick() == TickOutcome::Done);
    CHECK(sim.state().steps_taken == 0);
}

TEST_CASE("omnidirectional neighbor is swallowed in one tick") {
    GridMap map(2, 1);
    map.set({0, 0}, CellState::Seen);
    SimConfig cfg;
    cfg.cone = {1.0, 180.0};
    Simulation sim(map, {0, 0}, Heading::East, cfg);
    CHECK(sim.tick() == TickOutcome::Done);
    CHECK(sim.state().steps_taken <= 1);
}

TEST_CASE("unreachable region does not block completion") {
    // wall at x=2 seals the right side off; LOS cannot cross it either
    const GridMap map = parse_map("..#..").map;
    const EpisodeRecord rec =
        run_episode(map, "severed", {0, 0}, Heading::East, corridor_config());
    CHECK(rec.completed);
    CHECK(rec.total_steps <= 1);
    CHECK(rec.unreachable_unseen == 2);
}

TEST_CASE("untraversable start is rejected") {
    const GridMap map = parse_map(".#.").map;
    CHECK_THROWS_AS(
        run_episode(map, "m", {1, 0}, Heading::East, corridor_config()),
        std::invalid_argument);
}

TEST_CASE("episodes are deterministic") {
    const GridMap map = parse_map(read_text_file(std::string(RIPPLE_MAPS_DIR) +
                                                 "/passages.map"))
                            .map;
    SimConfig cfg;
    cfg.record_trace = true;
    const EpisodeRecord a = run_episode(map, "passages", {1, 1}, Heading::East, cfg);
    const EpisodeRecord b = run_episode(map, "passages", {1, 1}, Heading::East, cfg);
    CHECK(a == b);
    CHECK(a.completed);
}

TEST_CASE("per-tick unseen counts never increase and seen cells persist") {
    Splitmix64 rng{0x1ace};
    const GridMap map = parse_map(read_text_file(std::string(RIPPLE_MAPS_DIR) +
                                                 "/docks.map"))
                            .map;
    SimConfig cfg;
    Coord start = random_start(map, rng);
    Simulation sim(map, start, Heading::East, cfg);
    int prev_unseen = sim.coverage().unseen;
    GridMap prev_map = sim.map();
    for (int guard = 0; guard < 20000; ++guard) {
        const TickOutcome outcome = sim.tick();
        const int unseen = sim.coverage().unseen;
        CHECK(unseen <= prev_unseen);
        bool lost_seen = false;
        for (int y = 0; y < map.height() && !lost_seen; ++y)
            for (int x = 0; x < map.width(); ++x)
                if (prev_map.at({x, y}) == CellState::Seen &&
                    sim.map().at({x, y}) != CellState::Seen)
                    lost_seen = true;
        REQUIRE(!lost_seen);
        prev_unseen = unseen;
        prev_map = sim.map();
        CHECK(sim.state().steps_taken <= sim.ticks());
        CHECK(sim.ticks() <= sim.max_ticks());
        if (outcome != TickOutcome::Continue) {
            CHECK(outcome == TickOutcome::Done);
            break;
        }
    }
    CHECK(sim.coverage().unseen == 0);
}

TEST_CASE("max_ticks guard caps the episode") {
    GridMap corridor(40, 1);
    SimConfig cfg;
    cfg.cone = {1.0, 45.0};
    cfg.max_ticks = 3;
    const EpisodeRecord rec =
        run_episode(corridor, "corridor", {0, 0}, Heading::East, cfg);
    CHECK(!rec.completed);
    CHECK(rec.total_steps <= 3);
}

TEST_CASE("random_start draws only traversable cells, deterministically") {
    const GridMap map = parse_map("#.#").map;
    Splitmix64 a{123}, b{123};
    CHECK(random_start(map, a) == Coord{1, 0});
    CHECK(random_start(map, b) == Coord{1, 0});

    const GridMap open(4, 4);
    Splitmix64 c{9}, d{9};
    for (int i = 0; i < 20; ++i)
        CHECK(random_start(open, c) == random_start(open, d));
}

TEST_CASE("random_start is uniform within a 4-sigma binomial envelope") {
    const GridMap open(10, 10);
    Splitmix64 rng{2024};
    std::array<int, 100> counts{};
    for (int i = 0; i < 10000; ++i) {
        const Coord c = random_start(open, rng);
        ++counts[c.y * 10 + c.x];
    }
    // n=10000, p=1/100: 4*sqrt(n*p*(1-p)) ~ 39.8
    for (int count : counts) {
        CHECK(count > 60);
        CHECK(count < 140);
    }
}

TEST_CASE("stuck never occurs in fixpoint mode on connected fixtures") {
    const GridMap map = parse_map(read_text_file(std::string(RIPPLE_MAPS_DIR) +
                                                 "/square.map"))
                            .map;
    Splitmix64 rng{5};
    for (int i = 0; i < 5; ++i) {
        SimConfig cfg;
        const EpisodeRecord rec = run_episode(
            map, "square", random_start(map, rng), Heading::North, cfg);
        CHECK(rec.completed);
    }
}
