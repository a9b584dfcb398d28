#include "ripple/scenarios.hpp"

#include "ripple/io.hpp"

namespace ripple {

std::vector<Scenario> load_scenarios(const std::string& maps_dir) {
    static const char* names[] = {"square", "passages", "docks", "hall"};
    std::vector<Scenario> out;
    for (const char* name : names) {
        const std::string path = maps_dir + "/" + name + ".map";
        ParsedMap parsed = parse_map(read_text_file(path));
        out.push_back({name, std::move(parsed.map)});
    }

    const int w = out.front().map.width(), h = out.front().map.height();
    for (const Scenario& s : out) {
        if (s.map.width() != w || s.map.height() != h)
            throw std::runtime_error("scenario '" + s.id +
                                     "' does not share the common grid size");
        // connectivity: flood from the first traversable cell
        Coord from{-1, -1};
        for (int y = 0; y < s.map.height() && from.x < 0; ++y)
            for (int x = 0; x < s.map.width() && from.x < 0; ++x)
                if (s.map.traversable({x, y}))
                    from = {x, y};
        if (reachable_set(s.map, from).count() != s.map.traversable_count())
            throw std::runtime_error("scenario '" + s.id +
                                     "' has disconnected traversable regions");
    }
    return out;
}

}  // namespace ripple
