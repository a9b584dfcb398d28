#include "ripple/visibility.hpp"

#include <cmath>

namespace ripple {

bool line_of_sight(const GridMap& map, Coord a, Coord b) {
    if (!map.in_bounds(a) || !map.in_bounds(b))
        throw std::out_of_range("line_of_sight: coordinate out of bounds");
    int x = a.x, y = a.y;
    const int dx = std::abs(b.x - a.x), sx = a.x < b.x ? 1 : -1;
    const int dy = -std::abs(b.y - a.y), sy = a.y < b.y ? 1 : -1;
    int err = dx + dy;
    while (x != b.x || y != b.y) {
        const int e2 = 2 * err;
        if (e2 >= dy) {
            err += dy;
            x += sx;
        }
        if (e2 <= dx) {
            err += dx;
            y += sy;
        }
        if (x == b.x && y == b.y)
            break;  // endpoint never blocks
        if (map.at_unchecked({x, y}) == CellState::Untraversable)
            return false;
    }
    return true;
}

CellSet visible_set(const GridMap& map, Coord pos, Heading heading,
                    const FovCone& cone) {
    if (!map.traversable(pos))
        throw std::invalid_argument("visible_set: position untraversable");
    if (cone.range <= 0.0 || cone.half_angle_deg <= 0.0 ||
        cone.half_angle_deg > 180.0)
        throw std::invalid_argument(
            "visible_set: cone needs range > 0 and half angle in (0, 180]");

    CellSet out(map.width(), map.height());
    out.insert(pos);

    const Coord hv = heading_vector(heading);
    const double cos_half =
        std::cos(cone.half_angle_deg * 3.14159265358979323846 / 180.0);
    const double range_sq = cone.range * cone.range;
    const int r = static_cast<int>(std::floor(cone.range));

    const int x0 = std::max(0, pos.x - r), x1 = std::min(map.width() - 1, pos.x + r);
    const int y0 = std::max(0, pos.y - r), y1 = std::min(map.height() - 1, pos.y + r);
    for (int y = y0; y <= y1; ++y) {
        for (int x = x0; x <= x1; ++x) {
            if (x == pos.x && y == pos.y)
                continue;
            const int dx = x - pos.x, dy = y - pos.y;
            const double dist_sq = double(dx) * dx + double(dy) * dy;
            if (dist_sq > range_sq)
                continue;
            // angle test on cosines: dot/|v| >= cos(half_angle), with a hair
            // of slack so exact-boundary cells (e.g. the diagonal at 45 deg)
            // land inside.
            const double dot = double(hv.x) * dx + double(hv.y) * dy;
            if (dot + 1e-9 < cos_half * std::sqrt(dist_sq))
                continue;
            if (line_of_sight(map, pos, {x, y}))
                out.insert({x, y});
        }
    }
    return out;
}

int apply_vision(GridMap& map, Coord pos, Heading heading, const FovCone& cone) {
    const CellSet visible = visible_set(map, pos, heading, cone);
    int newly_seen = 0;
    for (const Coord& c : visible.cells())
        if (map.mark_seen(c))
            ++newly_seen;
    return newly_seen;
}

}  // namespace ripple
