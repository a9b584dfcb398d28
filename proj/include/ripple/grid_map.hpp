#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ripple {

// Node states. Untraversable cells never change; Unseen may flip to Seen,
// never back.
enum class CellState : std::uint8_t { Untraversable, Unseen, Seen };

struct Coord {
    int x = 0;
    int y = 0;

    bool operator==(const Coord&) const = default;
};

// Rectangular lattice of cells, row-major. Value type: copy freely, one
// episode mutates its own copy.
class GridMap {
public:
    GridMap() = default;
    GridMap(int width, int height, CellState fill = CellState::Unseen)
        : width_(width), height_(height),
          cells_(checked_cell_count(width, height), fill) {}

    int width() const { return width_; }
    int height() const { return height_; }
    int cell_count() const { return width_ * height_; }

    bool in_bounds(Coord c) const {
        return c.x >= 0 && c.x < width_ && c.y >= 0 && c.y < height_;
    }

    int index(Coord c) const { return c.y * width_ + c.x; }

    CellState at(Coord c) const {
        check_bounds(c);
        return cells_[index(c)];
    }

    // Unchecked fast path for hot loops; caller guarantees bounds.
    CellState at_unchecked(Coord c) const { return cells_[index(c)]; }

    bool traversable(Coord c) const { return at(c) != CellState::Untraversable; }

    // Raw write, intended for construction and test fixtures. Engine code
    // mutates only through mark_seen.
    void set(Coord c, CellState s) {
        check_bounds(c);
        cells_[index(c)] = s;
    }

    // Unseen -> Seen transition. Returns true if the cell flipped.
    // Untraversable and already-Seen cells are left untouched.
    bool mark_seen(Coord c) {
        check_bounds(c);
        CellState& s = cells_[index(c)];
        if (s != CellState::Unseen)
            return false;
        s = CellState::Seen;
        return true;
    }

    int traversable_count() const;
    int unseen_count() const;

    bool operator==(const GridMap&) const = default;

private:
    static std::size_t checked_cell_count(int width, int height) {
        if (width < 1 || height < 1)
            throw std::invalid_argument("GridMap: dimensions must be >= 1");
        return static_cast<std::size_t>(width) * height;
    }

    void check_bounds(Coord c) const {
        if (!in_bounds(c))
            throw std::out_of_range("GridMap: coordinate out of bounds");
    }

    int width_ = 0;
    int height_ = 0;
    std::vector<CellState> cells_;
};

// Flat set of cells over a fixed grid size; used for reachability and
// visibility results. Deterministic iteration is always row-major.
class CellSet {
public:
    CellSet() = default;
    CellSet(int width, int height)
        : width_(width), height_(height),
          bits_(static_cast<std::size_t>(width) * height, 0) {}

    int width() const { return width_; }
    int height() const { return height_; }
    int count() const { return count_; }

    bool contains(Coord c) const {
        if (c.x < 0 || c.x >= width_ || c.y < 0 || c.y >= height_)
            return false;
        return bits_[static_cast<std::size_t>(c.y) * width_ + c.x] != 0;
    }

    void insert(Coord c) {
        auto& b = bits_[static_cast<std::size_t>(c.y) * width_ + c.x];
        if (!b) {
            b = 1;
            ++count_;
        }
    }

    std::vector<Coord> cells() const;

    bool operator==(const CellSet&) const = default;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint8_t> bits_;
    int count_ = 0;
};

struct CoverageStats {
    int total_traversable = 0;
    int unseen = 0;
    double unseen_percent = 0.0;
};

struct MapParseError : std::runtime_error {
    enum class Kind { RaggedRows, IllegalChar, MultipleStarts, EmptyMap };

    MapParseError(Kind k, const std::string& msg)
        : std::runtime_error(msg), kind(k) {}

    Kind kind;
};

struct ParsedMap {
    GridMap map;
    std::optional<Coord> start;  // the 'S' cell, if present
};

// Line-oriented ASCII map format: '#' untraversable, '.' traversable,
// 'S' traversable designated start (at most one). LF or CRLF, trailing
// blank lines ignored, all rows equal length. A map with no traversable
// cell is rejected as empty.
ParsedMap parse_map(std::string_view text);

// Inverse of parse_map for canonical documents (LF line ends, trailing
// newline, no trailing blank lines).
std::string serialize_map(const GridMap& map, std::optional<Coord> start = {});

// In-bounds von Neumann neighbors of c, fixed order: up, right, down, left.
// No traversability filtering; callers filter.
struct NeighborList {
    std::array<Coord, 4> cells{};
    int count = 0;

    const Coord* begin() const { return cells.data(); }
    const Coord* end() const { return cells.data() + count; }
};

NeighborList neighbors(const GridMap& map, Coord c);

// Flood fill over traversable cells from `from` (von Neumann adjacency).
CellSet reachable_set(const GridMap& map, Coord from);

// Coverage counters restricted to `reachable`.
CoverageStats coverage_stats(const GridMap& map, const CellSet& reachable);

}  // namespace ripple
