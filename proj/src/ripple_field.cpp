#include "ripple/ripple_field.hpp"

#include <algorithm>

namespace ripple {

namespace {

void check_dims(const GridMap& map, const DistanceField& field) {
    if (field.width != map.width() || field.height != map.height())
        throw std::invalid_argument("field dimensions do not match map");
}

}  // namespace

DistanceField bfs_oracle(const GridMap& map) {
    DistanceField field(map.width(), map.height());
    const int w = map.width(), h = map.height();

    std::vector<std::int32_t> queue;
    queue.reserve(static_cast<std::size_t>(w) * h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            if (map.at_unchecked({x, y}) == CellState::Unseen) {
                field.values[y * w + x] = 0;
                queue.push_back(y * w + x);
            }
        }
    }
    field.complete = queue.empty();

    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::int32_t idx = queue[head];
        const int x = idx % w, y = idx / w;
        const std::int32_t next = field.values[idx] + 1;
        const auto expand = [&](int nx, int ny) {
            const std::int32_t nidx = ny * w + nx;
            if (map.at_unchecked({nx, ny}) != CellState::Untraversable &&
                field.values[nidx] == DistanceField::kUnreached) {
                field.values[nidx] = next;
                queue.push_back(nidx);
            }
        };
        if (y > 0) expand(x, y - 1);
        if (x + 1 < w) expand(x + 1, y);
        if (y + 1 < h) expand(x, y + 1);
        if (x > 0) expand(x - 1, y);
    }
    return field;
}

void reset_field(const GridMap& map, DistanceField& field) {
    check_dims(map, field);
    for (int y = 0; y < map.height(); ++y)
        for (int x = 0; x < map.width(); ++x)
            field.values[y * field.width + x] =
                map.at_unchecked({x, y}) == CellState::Unseen
                    ? 0
                    : DistanceField::kUnreached;
}

bool relax_sweep(const GridMap& map, DistanceField& field) {
    check_dims(map, field);
    const int w = map.width(), h = map.height();
    bool changed = false;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const int idx = y * w + x;
            const CellState s = map.at_unchecked({x, y});
            std::int32_t next;
            if (s == CellState::Untraversable) {
                next = DistanceField::kUnreached;
            } else if (s == CellState::Unseen) {
                next = 0;
            } else {
                std::int32_t best = DistanceField::kUnreached;
                const auto consider = [&](int nx, int ny) {
                    if (map.at_unchecked({nx, ny}) != CellState::Untraversable)
                        best = std::min(best, field.values[ny * w + nx]);
                };
                if (y > 0) consider(x, y - 1);
                if (x + 1 < w) consider(x + 1, y);
                if (y + 1 < h) consider(x, y + 1);
                if (x > 0) consider(x - 1, y);
                next = best == DistanceField::kUnreached
                           ? DistanceField::kUnreached
                           : best + 1;
            }
            if (field.values[idx] != next) {
                field.values[idx] = next;
                changed = true;
            }
        }
    }
    return changed;
}

void propagate(const GridMap& map, DistanceField& field, FieldMode mode) {
    check_dims(map, field);
    if (mode.kind == FieldMode::Kind::Fixpoint) {
        field = bfs_oracle(map);
        return;
    }
    reset_field(map, field);
    for (int i = 0; i < mode.sweep_count; ++i)
        if (!relax_sweep(map, field))
            break;
    field.complete = map.unseen_count() == 0;
}

std::string field_to_text(const DistanceField& field) {
    std::string out;
    for (int y = 0; y < field.height; ++y) {
        for (int x = 0; x < field.width; ++x) {
            if (x > 0)
                out += ' ';
            const std::int32_t v = field.values[y * field.width + x];
            if (v == DistanceField::kUnreached)
                out += '.';
            else
                out += std::to_string(v);
        }
        out += '\n';
    }
    return out;
}

}  // namespace ripple
