#pragma once

#include "ripple/grid_map.hpp"

namespace ripple {

// Cardinal facing. Screen convention: y grows downward, so North is (0,-1).
enum class Heading : std::uint8_t { North, East, South, West };

constexpr Coord heading_vector(Heading h) {
    switch (h) {
        case Heading::North: return {0, -1};
        case Heading::East: return {1, 0};
        case Heading::South: return {0, 1};
        case Heading::West: return {-1, 0};
    }
    return {0, 0};
}

constexpr char heading_glyph(Heading h) {
    switch (h) {
        case Heading::North: return '^';
        case Heading::East: return '>';
        case Heading::South: return 'v';
        case Heading::West: return '<';
    }
    return '?';
}

// Vision cone. Range is Euclidean between cell centers, in node units.
// half_angle_deg is measured from the heading vector; 180 = omnidirectional.
struct FovCone {
    double range = 6.0;
    double half_angle_deg = 45.0;
};

// True iff no untraversable cell lies strictly between a and b on the
// Bresenham line traced from a to b. Endpoints never block; an
// untraversable b is still sighted as a wall. Direction-dependent:
// los(a,b) and los(b,a) may disagree on gridlines through diagonal gaps.
bool line_of_sight(const GridMap& map, Coord a, Coord b);

// All cells (traversable or not) within the cone from pos: center distance
// <= range, angle to heading <= half_angle (inclusive at the boundary),
// and line of sight from pos. Always contains pos.
CellSet visible_set(const GridMap& map, Coord pos, Heading heading,
                    const FovCone& cone);

// Flips every traversable cell of visible_set from Unseen to Seen.
// Returns the number of cells that flipped.
int apply_vision(GridMap& map, Coord pos, Heading heading, const FovCone& cone);

}  // namespace ripple
