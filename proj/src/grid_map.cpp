#include "ripple/grid_map.hpp"

namespace ripple {

int GridMap::traversable_count() const {
    int n = 0;
    for (CellState s : cells_)
        if (s != CellState::Untraversable)
            ++n;
    return n;
}

int GridMap::unseen_count() const {
    int n = 0;
    for (CellState s : cells_)
        if (s == CellState::Unseen)
            ++n;
    return n;
}

std::vector<Coord> CellSet::cells() const {
    std::vector<Coord> out;
    out.reserve(count_);
    for (int y = 0; y < height_; ++y)
        for (int x = 0; x < width_; ++x)
            if (bits_[static_cast<std::size_t>(y) * width_ + x])
                out.push_back({x, y});
    return out;
}

ParsedMap parse_map(std::string_view text) {
    std::vector<std::string_view> rows;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = (nl == std::string_view::npos)
                                    ? text.substr(pos)
                                    : text.substr(pos, nl - pos);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        rows.push_back(line);
        if (nl == std::string_view::npos)
            break;
        pos = nl + 1;
    }
    while (!rows.empty() && rows.back().empty())
        rows.pop_back();
    if (rows.empty())
        throw MapParseError(MapParseError::Kind::EmptyMap, "map document is empty");

    const std::size_t width = rows.front().size();
    for (const auto& r : rows)
        if (r.size() != width)
            throw MapParseError(MapParseError::Kind::RaggedRows,
                                "map rows have unequal lengths");
    if (width == 0)
        throw MapParseError(MapParseError::Kind::EmptyMap, "map document is empty");

    GridMap map(static_cast<int>(width), static_cast<int>(rows.size()),
                CellState::Untraversable);
    std::optional<Coord> start;
    int traversable = 0;
    for (int y = 0; y < map.height(); ++y) {
        for (int x = 0; x < map.width(); ++x) {
            const char ch = rows[y][x];
            switch (ch) {
                case '#':
                    break;
                case 'S':
                    if (start)
                        throw MapParseError(MapParseError::Kind::MultipleStarts,
                                            "more than one 'S' start cell");
                    start = Coord{x, y};
                    [[fallthrough]];
                case '.':
                    map.set({x, y}, CellState::Unseen);
                    ++traversable;
                    break;
                default:
                    throw MapParseError(
                        MapParseError::Kind::IllegalChar,
                        std::string("illegal map character '") + ch + "'");
            }
        }
    }
    if (traversable == 0)
        throw MapParseError(MapParseError::Kind::EmptyMap,
                            "map has no traversable cells");
    return {std::move(map), start};
}

std::string serialize_map(const GridMap& map, std::optional<Coord> start) {
    std::string out;
    out.reserve(static_cast<std::size_t>(map.height()) * (map.width() + 1));
    for (int y = 0; y < map.height(); ++y) {
        for (int x = 0; x < map.width(); ++x) {
            const Coord c{x, y};
            if (start && *start == c)
                out += 'S';
            else
                out += map.at(c) == CellState::Untraversable ? '#' : '.';
        }
        out += '\n';
    }
    return out;
}

NeighborList neighbors(const GridMap& map, Coord c) {
    if (!map.in_bounds(c))
        throw std::out_of_range("neighbors: coordinate out of bounds");
    static constexpr Coord offsets[4] = {{0, -1}, {1, 0}, {0, 1}, {-1, 0}};
    NeighborList out;
    for (const Coord& d : offsets) {
        const Coord n{c.x + d.x, c.y + d.y};
        if (map.in_bounds(n))
            out.cells[out.count++] = n;
    }
    return out;
}

CellSet reachable_set(const GridMap& map, Coord from) {
    if (!map.traversable(from))
        throw std::invalid_argument("reachable_set: start cell untraversable");
    CellSet set(map.width(), map.height());
    std::vector<Coord> stack{from};
    set.insert(from);
    while (!stack.empty()) {
        const Coord c = stack.back();
        stack.pop_back();
        for (const Coord& n : neighbors(map, c)) {
            if (map.at_unchecked(n) != CellState::Untraversable &&
                !set.contains(n)) {
                set.insert(n);
                stack.push_back(n);
            }
        }
    }
    return set;
}

CoverageStats coverage_stats(const GridMap& map, const CellSet& reachable) {
    CoverageStats stats;
    stats.total_traversable = reachable.count();
    for (int y = 0; y < map.height(); ++y)
        for (int x = 0; x < map.width(); ++x)
            if (reachable.contains({x, y}) &&
                map.at_unchecked({x, y}) == CellState::Unseen)
                ++stats.unseen;
    stats.unseen_percent =
        stats.total_traversable == 0
            ? 0.0
            : 100.0 * stats.unseen / stats.total_traversable;
    return stats;
}

}  // namespace ripple
