#pragma once

#include <span>
#include <string>
#include <vector>

#include "ripple/sim.hpp"

namespace ripple {

struct BenchConfig {
    std::uint64_t episodes = 200;
    std::uint64_t base_seed = 0;
    SimConfig sim;
    Heading initial_heading = Heading::East;
    std::vector<std::string> map_paths;
    // Worker threads. Results are collected by (map, episode) index, so the
    // output is identical for any job count.
    int jobs = 1;
};

struct MapSummary {
    std::string map_id;
    std::uint64_t episodes = 0;
    double mean_steps = 0.0;
    double sd_steps = 0.0;  // sample (n-1); 0 for n=1
    std::uint64_t min_steps = 0;
    std::uint64_t median_steps = 0;  // lower-middle element for even n
    std::uint64_t max_steps = 0;
    double completion_rate = 0.0;
};

struct BenchResult {
    std::vector<EpisodeRecord> records;  // ordered by (map, episode index)
    std::vector<MapSummary> summaries;   // one per map, input order
};

struct MapLoadError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Map id used in records and CSV: file stem (basename minus extension).
std::string map_id_from_path(const std::string& path);

// N episodes per map, per-episode seed = mix_seed(base_seed, episode index),
// start drawn uniformly from that seed's stream.
BenchResult run_bench(const BenchConfig& config);

MapSummary summarize(const std::string& map_id,
                     std::span<const EpisodeRecord> records);

// CSV emitters. Header rows mandatory, 'completed' as 0/1, reals fixed to
// four decimals so reruns are byte-identical.
std::string records_csv(const std::vector<EpisodeRecord>& records);
std::string summary_csv(const std::vector<MapSummary>& summaries);

}  // namespace ripple
