#pragma once

#include <string>

#include "ripple/sim.hpp"

namespace ripple {

// One ASCII frame: header line "tick=T unseen=P%", then the grid
// ('#' wall, U+00B7 seen, U+2588 unseen, '@' agent), then a legend line
// carrying the heading glyph next to the agent glyph.
std::string render_ascii(const GridMap& map, const AgentState& state,
                         const CoverageStats& stats, std::uint64_t tick);

// Binary PPM (P6), one pixel per cell. wall (64,64,64), unseen (16,16,16),
// seen (200,200,200), agent (220,40,40).
std::string render_ppm(const GridMap& map, const AgentState& state);

}  // namespace ripple
