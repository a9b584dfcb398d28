#include "ripple/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <thread>

#include "ripple/io.hpp"

namespace ripple {

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

}  // namespace

std::string map_id_from_path(const std::string& path) {
    const std::size_t slash = path.find_last_of("/\\");
    std::string stem = slash == std::string::npos ? path : path.substr(slash + 1);
    const std::size_t dot = stem.find_last_of('.');
    if (dot != std::string::npos && dot > 0)
        stem.resize(dot);
    return stem;
}

BenchResult run_bench(const BenchConfig& config) {
    if (config.episodes < 1)
        throw std::invalid_argument("run_bench: episodes must be >= 1");

    struct LoadedMap {
        std::string id;
        GridMap map;
    };
    std::vector<LoadedMap> maps;
    for (const std::string& path : config.map_paths) {
        try {
            ParsedMap parsed = parse_map(read_text_file(path));
            maps.push_back({map_id_from_path(path), std::move(parsed.map)});
        } catch (const std::exception& e) {
            throw MapLoadError(path + ": " + e.what());
        }
    }

    BenchResult result;
    const std::uint64_t per_map = config.episodes;
    result.records.resize(maps.size() * per_map);

    const auto run_one = [&](std::size_t flat) {
        const std::size_t m = flat / per_map;
        const std::uint64_t ep = flat % per_map;
        SimConfig sim = config.sim;
        sim.seed = mix_seed(config.base_seed, ep);
        Splitmix64 rng{sim.seed};
        const Coord start = random_start(maps[m].map, rng);
        result.records[flat] = run_episode(maps[m].map, maps[m].id, start,
                                           config.initial_heading, sim);
    };

    const std::size_t total = result.records.size();
    const int jobs = std::max(1, config.jobs);
    if (jobs == 1 || total < 2) {
        for (std::size_t i = 0; i < total; ++i)
            run_one(i);
    } else {
        std::atomic<std::size_t> cursor{0};
        std::atomic<bool> failed{false};
        std::exception_ptr error;
        std::mutex error_mutex;
        std::vector<std::thread> workers;
        const int n = std::min<std::size_t>(jobs, total);
        workers.reserve(n);
        for (int t = 0; t < n; ++t) {
            workers.emplace_back([&] {
                std::size_t i;
                while ((i = cursor.fetch_add(1)) < total && !failed.load()) {
                    try {
                        run_one(i);
                    } catch (...) {
                        std::scoped_lock lock(error_mutex);
                        if (!error)
                            error = std::current_exception();
                        failed.store(true);
                    }
                }
            });
        }
        for (auto& w : workers)
            w.join();
        if (error)
            std::rethrow_exception(error);
    }

    for (std::size_t m = 0; m < maps.size(); ++m)
        result.summaries.push_back(summarize(
            maps[m].id,
            std::span<const EpisodeRecord>(result.records.data() + m * per_map,
                                           per_map)));
    return result;
}

MapSummary summarize(const std::string& map_id,
                     std::span<const EpisodeRecord> records) {
    if (records.empty())
        throw std::invalid_argument("summarize: no records");

    MapSummary s;
    s.map_id = map_id;
    s.episodes = records.size();

    std::vector<std::uint64_t> steps;
    steps.reserve(records.size());
    std::uint64_t completed = 0;
    double sum = 0.0;
    for (const EpisodeRecord& r : records) {
        steps.push_back(r.total_steps);
        sum += static_cast<double>(r.total_steps);
        if (r.completed)
            ++completed;
    }
    std::sort(steps.begin(), steps.end());

    const std::size_t n = steps.size();
    s.mean_steps = sum / static_cast<double>(n);
    if (n > 1) {
        double sq = 0.0;
        for (std::uint64_t v : steps) {
            const double d = static_cast<double>(v) - s.mean_steps;
            sq += d * d;
        }
        s.sd_steps = std::sqrt(sq / static_cast<double>(n - 1));
    }
    s.min_steps = steps.front();
    s.max_steps = steps.back();
    s.median_steps = steps[(n - 1) / 2];  // lower-middle for even n
    s.completion_rate = static_cast<double>(completed) / static_cast<double>(n);
    return s;
}

std::string records_csv(const std::vector<EpisodeRecord>& records) {
    std::string out =
        "map_id,episode,seed,start_x,start_y,steps,completed,unreachable_unseen\n";
    std::string current_map;
    std::uint64_t episode = 0;
    for (const EpisodeRecord& r : records) {
        if (r.map_id != current_map) {
            current_map = r.map_id;
            episode = 0;
        }
        out += r.map_id;
        out += ',';
        out += std::to_string(episode++);
        out += ',';
        out += std::to_string(r.seed);
        out += ',';
        out += std::to_string(r.start.x);
        out += ',';
        out += std::to_string(r.start.y);
        out += ',';
        out += std::to_string(r.total_steps);
        out += ',';
        out += r.completed ? '1' : '0';
        out += ',';
        out += std::to_string(r.unreachable_unseen);
        out += '\n';
    }
    return out;
}

std::string summary_csv(const std::vector<MapSummary>& summaries) {
    std::string out =
        "map_id,episodes,mean_steps,sd_steps,min_steps,median_steps,max_steps,"
        "completion_rate\n";
    for (const MapSummary& s : summaries) {
        out += s.map_id;
        out += ',';
        out += std::to_string(s.episodes);
        out += ',';
        out += format_double(s.mean_steps);
        out += ',';
        out += format_double(s.sd_steps);
        out += ',';
        out += std::to_string(s.min_steps);
        out += ',';
        out += std::to_string(s.median_steps);
        out += ',';
        out += std::to_string(s.max_steps);
        out += ',';
        out += format_double(s.completion_rate);
        out += '\n';
    }
    return out;
}

}  // namespace ripple
