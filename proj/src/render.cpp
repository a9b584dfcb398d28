#include "ripple/render.hpp"

#include <cstdio>

namespace ripple {

std::string render_ascii(const GridMap& map, const AgentState& state,
                         const CoverageStats& stats, std::uint64_t tick) {
    char header[64];
    std::snprintf(header, sizeof(header), "tick=%llu unseen=%.1f%%\n",
                  static_cast<unsigned long long>(tick), stats.unseen_percent);
    std::string out = header;
    for (int y = 0; y < map.height(); ++y) {
        for (int x = 0; x < map.width(); ++x) {
            if (state.pos == Coord{x, y}) {
                out += '@';
                continue;
            }
            switch (map.at_unchecked({x, y})) {
                case CellState::Untraversable: out += '#'; break;
                case CellState::Seen: out += "·"; break;
                case CellState::Unseen: out += "█"; break;
            }
        }
        out += '\n';
    }
    out += "legend: @=agent(";
    out += heading_glyph(state.heading);
    out += ") #=wall ·=seen █=unseen\n";
    return out;
}

std::string render_ppm(const GridMap& map, const AgentState& state) {
    std::string out = "P6\n" + std::to_string(map.width()) + " " +
                      std::to_string(map.height()) + "\n255\n";
    out.reserve(out.size() +
                static_cast<std::size_t>(map.width()) * map.height() * 3);
    const auto px = [&](unsigned char r, unsigned char g, unsigned char b) {
        out += static_cast<char>(r);
        out += static_cast<char>(g);
        out += static_cast<char>(b);
    };
    for (int y = 0; y < map.height(); ++y) {
        for (int x = 0; x < map.width(); ++x) {
            if (state.pos == Coord{x, y}) {
                px(220, 40, 40);
                continue;
            }
            switch (map.at_unchecked({x, y})) {
                case CellState::Untraversable: px(64, 64, 64); break;
                case CellState::Unseen: px(16, 16, 16); break;
                case CellState::Seen: px(200, 200, 200); break;
            }
        }
    }
    return out;
}

}  // namespace ripple
