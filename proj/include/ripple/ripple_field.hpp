#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "ripple/grid_map.hpp"

namespace ripple {

// Per-cell distance to the nearest unseen traversable cell, measured in
// steps through traversable cells. Unseen cells are the sources and always
// read 0. Untraversable cells and seen cells with no path to a source hold
// kUnreached. `complete` is set when the map has no unseen traversable cell
// left (every traversable entry is then kUnreached).
struct DistanceField {
    static constexpr std::int32_t kUnreached =
        std::numeric_limits<std::int32_t>::max();

    DistanceField() = default;
    DistanceField(int width, int height)
        : width(width), height(height),
          values(static_cast<std::size_t>(width) * height, kUnreached) {}

    int width = 0;
    int height = 0;
    std::vector<std::int32_t> values;
    bool complete = false;

    std::int32_t at(Coord c) const { return values[c.y * width + c.x]; }
    std::int32_t& at(Coord c) { return values[c.y * width + c.x]; }

    bool operator==(const DistanceField&) const = default;
};

// How the field is refreshed each tick.
//   Fixpoint  - exact recompute (BFS) every tick.
//   Sweeps(k) - k in-place relaxation sweeps per tick, after resetting all
//               seen entries; emulates periodic partial propagation.
struct FieldMode {
    enum class Kind : std::uint8_t { Fixpoint, Sweeps };

    static FieldMode fixpoint() { return {Kind::Fixpoint, 0}; }
    static FieldMode sweeps(int k) {
        if (k < 1)
            throw std::invalid_argument("FieldMode: sweep count must be >= 1");
        return {Kind::Sweeps, k};
    }

    Kind kind = Kind::Fixpoint;
    int sweep_count = 0;

    bool operator==(const FieldMode&) const = default;
};

// Exact field: multi-source BFS seeded at every unseen traversable cell,
// unit step cost, expansion through traversable cells only.
DistanceField bfs_oracle(const GridMap& map);

// Pins unseen cells to 0, unreaches everything else. The state every sweep
// run starts from; also used to drop stale values once unseen cells shrink
// (relaxation alone only ever lowers values, so an entry pointing at a
// now-seen source would never recover).
void reset_field(const GridMap& map, DistanceField& field);

// One row-major in-place pass: every seen cell takes
// 1 + min(traversable neighbors), unreached treated as infinity; unseen
// cells are forced to 0, untraversable to kUnreached. Returns whether any
// entry changed.
bool relax_sweep(const GridMap& map, DistanceField& field);

// Tick refresh. Fixpoint: replace the field with bfs_oracle(map).
// Sweeps(k): reset_field, then up to k sweeps with early exit once a sweep
// changes nothing.
void propagate(const GridMap& map, DistanceField& field, FieldMode mode);

// Debug dump: one row per line, whitespace-separated values, '.' for
// kUnreached.
std::string field_to_text(const DistanceField& field);

}  // namespace ripple
