#pragma once

#include <string>
#include <vector>

#include "ripple/grid_map.hpp"

namespace ripple {

struct Scenario {
    std::string id;
    GridMap map;
};

// The four bundled 48x48 fixtures: square, passages, docks, hall.
// Loading validates that all parse, share one grid size, and are fully
// connected (reachable set from any traversable cell covers them all).
std::vector<Scenario> load_scenarios(const std::string& maps_dir);

}  // namespace ripple
