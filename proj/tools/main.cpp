#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ripple/bench.hpp"
#include "ripple/io.hpp"
#include "ripple/render.hpp"
#include "ripple/sim.hpp"

namespace {

using namespace ripple;

struct SimFlags {
    double fov_range = 6.0;
    double fov_angle = 45.0;  // half-angle, degrees
    std::string field_mode = "fixpoint";
    std::uint64_t max_ticks = 0;
    std::uint64_t seed = 0;
    std::string heading = "e";
};

void add_sim_flags(CLI::App* cmd, SimFlags& f) {
    cmd->add_option("--fov-range", f.fov_range,
                    "Vision range in node units (default 6.0)");
    cmd->add_option("--fov-angle", f.fov_angle,
                    "Vision HALF-angle in degrees, 180 = omnidirectional "
                    "(default 45.0)");
    cmd->add_option("--field-mode", f.field_mode,
                    "Distance field refresh: fixpoint | sweeps:K (default "
                    "fixpoint)");
    cmd->add_option("--max-ticks", f.max_ticks,
                    "Tick guard limit, 0 = 10x reachable cells (default 0)");
    cmd->add_option("--seed", f.seed, "RNG seed (default 0)");
    cmd->add_option("--heading", f.heading,
                    "Initial heading: n | e | s | w (default e)");
}

FieldMode parse_field_mode(const std::string& text) {
    if (text == "fixpoint")
        return FieldMode::fixpoint();
    if (text.rfind("sweeps:", 0) == 0) {
        const std::string k = text.substr(7);
        try {
            const int n = std::stoi(k);
            if (n >= 1 && std::to_string(n) == k)
                return FieldMode::sweeps(n);
        } catch (const std::exception&) {
        }
    }
    throw CLI::ValidationError("--field-mode",
                               "expected 'fixpoint' or 'sweeps:K' with K >= 1");
}

Heading parse_heading(const std::string& text) {
    if (text == "n") return Heading::North;
    if (text == "e") return Heading::East;
    if (text == "s") return Heading::South;
    if (text == "w") return Heading::West;
    throw CLI::ValidationError("--heading", "expected one of n, e, s, w");
}

Coord parse_start(const std::string& text) {
    const std::size_t comma = text.find(',');
    if (comma != std::string::npos) {
        try {
            const std::string xs = text.substr(0, comma);
            const std::string ys = text.substr(comma + 1);
            const int x = std::stoi(xs);
            const int y = std::stoi(ys);
            if (std::to_string(x) == xs && std::to_string(y) == ys)
                return {x, y};
        } catch (const std::exception&) {
        }
    }
    throw CLI::ValidationError("--start", "expected X,Y with integer indices");
}

SimConfig make_sim_config(const SimFlags& f) {
    SimConfig cfg;
    cfg.cone.range = f.fov_range;
    cfg.cone.half_angle_deg = f.fov_angle;
    cfg.field_mode = parse_field_mode(f.field_mode);
    cfg.max_ticks = f.max_ticks;
    cfg.seed = f.seed;
    if (cfg.cone.range <= 0.0)
        throw CLI::ValidationError("--fov-range", "must be > 0");
    if (cfg.cone.half_angle_deg <= 0.0 || cfg.cone.half_angle_deg > 180.0)
        throw CLI::ValidationError("--fov-angle", "must be in (0, 180]");
    return cfg;
}

// Start cell: --start when given, else a seeded uniform draw.
Coord resolve_start(const GridMap& map, const std::optional<std::string>& flag,
                    std::uint64_t seed) {
    if (flag) {
        const Coord c = parse_start(*flag);
        if (!map.in_bounds(c))
            throw CLI::ValidationError("--start", "cell is out of bounds");
        if (!map.traversable(c))
            throw CLI::ValidationError("--start", "cell is untraversable");
        return c;
    }
    Splitmix64 rng{seed};
    return random_start(map, rng);
}

int cmd_run(const std::string& map_path, const std::optional<std::string>& start_flag,
            const SimFlags& flags, bool dump_field, bool trace) {
    SimConfig cfg = make_sim_config(flags);
    cfg.record_trace = true;
    const Heading heading = parse_heading(flags.heading);
    ParsedMap parsed = parse_map(read_text_file(map_path));
    const Coord start = start_flag || !parsed.start
                            ? resolve_start(parsed.map, start_flag, cfg.seed)
                            : *parsed.start;

    if (dump_field) {
        Simulation preview(parsed.map, start, heading, cfg);
        std::fputs(field_to_text(preview.preview_field()).c_str(), stdout);
    }

    const EpisodeRecord rec =
        run_episode(parsed.map, map_id_from_path(map_path), start, heading, cfg);

    if (trace)
        for (const TracePoint& p : rec.trace)
            std::printf("trace %llu %.1f\n",
                        static_cast<unsigned long long>(p.tick),
                        p.unseen_percent);

    const double final_unseen =
        rec.trace.empty() ? 0.0 : rec.trace.back().unseen_percent;
    std::printf("%s %llu %d %.1f\n", rec.map_id.c_str(),
                static_cast<unsigned long long>(rec.total_steps),
                rec.completed ? 1 : 0, final_unseen);

    if (!rec.completed && cfg.field_mode.kind == FieldMode::Kind::Fixpoint) {
        std::fprintf(stderr,
                     "internal invariant violated: episode did not complete "
                     "in fixpoint mode\n");
        return 4;
    }
    return 0;
}

int cmd_bench(const std::vector<std::string>& map_paths, std::uint64_t episodes,
              const SimFlags& flags, int jobs, const std::string& out,
              const std::string& summary_out) {
    if (episodes < 1)
        throw CLI::ValidationError("--episodes", "must be >= 1");
    BenchConfig cfg;
    cfg.episodes = episodes;
    cfg.base_seed = flags.seed;
    cfg.sim = make_sim_config(flags);
    cfg.initial_heading = parse_heading(flags.heading);
    cfg.map_paths = map_paths;
    cfg.jobs = jobs;

    const BenchResult result = run_bench(cfg);
    const std::string records = records_csv(result.records);
    const std::string summary = summary_csv(result.summaries);
    if (out.empty())
        std::fputs(records.c_str(), stdout);
    else
        write_file(out, records);
    if (summary_out.empty())
        std::fputs(summary.c_str(), stdout);
    else
        write_file(summary_out, summary);

    if (cfg.sim.field_mode.kind == FieldMode::Kind::Fixpoint)
        for (const MapSummary& s : result.summaries)
            if (s.completion_rate != 1.0) {
                std::fprintf(stderr,
                             "internal invariant violated: incomplete episodes "
                             "on '%s' in fixpoint mode\n",
                             s.map_id.c_str());
                return 4;
            }
    return 0;
}

int cmd_render(const std::string& map_path,
               const std::optional<std::string>& start_flag,
               const SimFlags& flags, std::uint64_t every,
               const std::string& format, const std::string& out_dir) {
    if (format != "ascii" && format != "ppm")
        throw CLI::ValidationError("--format", "expected ascii or ppm");
    if (every < 1)
        throw CLI::ValidationError("--every", "stride must be >= 1");
    const SimConfig cfg = make_sim_config(flags);
    const Heading heading = parse_heading(flags.heading);
    ParsedMap parsed = parse_map(read_text_file(map_path));
    const Coord start = start_flag || !parsed.start
                            ? resolve_start(parsed.map, start_flag, cfg.seed)
                            : *parsed.start;

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec)
        throw IoError("cannot create output directory: " + out_dir);

    Simulation sim(parsed.map, start, heading, cfg);
    const auto emit = [&](std::uint64_t tick) {
        char name[32];
        std::snprintf(name, sizeof(name), "frame_%06llu.%s",
                      static_cast<unsigned long long>(tick),
                      format == "ppm" ? "ppm" : "txt");
        const std::string frame =
            format == "ppm"
                ? render_ppm(sim.map(), sim.state())
                : render_ascii(sim.map(), sim.state(), sim.coverage(), tick);
        write_file(out_dir + "/" + name, frame);
    };

    emit(0);
    std::uint64_t last_emitted = 0;
    TickOutcome outcome = TickOutcome::Continue;
    while (sim.ticks() < sim.max_ticks()) {
        outcome = sim.tick();
        if (sim.ticks() % every == 0) {
            emit(sim.ticks());
            last_emitted = sim.ticks();
        }
        if (outcome != TickOutcome::Continue)
            break;
    }
    if (last_emitted != sim.ticks())
        emit(sim.ticks());

    if (outcome != TickOutcome::Done &&
        cfg.field_mode.kind == FieldMode::Kind::Fixpoint) {
        std::fprintf(stderr,
                     "internal invariant violated: episode did not complete "
                     "in fixpoint mode\n");
        return 4;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Grid coverage-path-planning engine: an agent with a cone "
                 "field of view walks down a propagated distance field until "
                 "every reachable cell has been seen.",
                 "ripplefront"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Print help for all subcommands");

    SimFlags run_flags, bench_flags, render_flags;

    // run
    auto* run = app.add_subcommand("run", "Run a single episode and print "
                                          "'map_id steps completed "
                                          "unseen_percent_final'");
    std::string run_map;
    std::optional<std::string> run_start;
    bool run_dump_field = false, run_trace = false;
    run->add_option("--map", run_map, "Map file")->required();
    run->add_option("--start", run_start,
                    "Start cell X,Y (default: seeded random, or the map's 'S')");
    add_sim_flags(run, run_flags);
    run->add_flag("--dump-field", run_dump_field,
                  "Print the initial distance field ('.' = unreached)");
    run->add_flag("--trace", run_trace,
                  "Print 'trace TICK UNSEEN_PERCENT' lines");

    // bench
    auto* bench = app.add_subcommand(
        "bench", "Run N random-start episodes per map and emit CSV");
    std::vector<std::string> bench_maps;
    std::uint64_t bench_episodes = 200;
    int bench_jobs = 1;
    std::string bench_out, bench_summary_out;
    bench->add_option("--map", bench_maps, "Map file (repeatable)")->required();
    bench->add_option("--episodes", bench_episodes,
                      "Episodes per map (default 200)");
    add_sim_flags(bench, bench_flags);
    bench->add_option("--jobs", bench_jobs,
                      "Worker threads; output is identical for any value "
                      "(default 1)");
    bench->add_option("--out", bench_out,
                      "Per-episode CSV path (default: stdout)");
    bench->add_option("--summary-out", bench_summary_out,
                      "Per-map summary CSV path (default: stdout)");

    // render
    auto* render = app.add_subcommand(
        "render", "Run one episode and write a frame per tick stride");
    std::string render_map, render_format = "ascii", render_out = "frames";
    std::optional<std::string> render_start;
    std::uint64_t render_every = 1;
    render->add_option("--map", render_map, "Map file")->required();
    render->add_option("--start", render_start,
                       "Start cell X,Y (default: seeded random, or the map's "
                       "'S')");
    add_sim_flags(render, render_flags);
    render->add_option("--every", render_every, "Tick stride (default 1)");
    render->add_option("--format", render_format, "ascii | ppm (default ascii)");
    render->add_option("--out", render_out,
                       "Output directory (default 'frames')");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);  // --help and friends
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (run->parsed())
            return cmd_run(run_map, run_start, run_flags, run_dump_field,
                           run_trace);
        if (bench->parsed())
            return cmd_bench(bench_maps, bench_episodes, bench_flags,
                             bench_jobs, bench_out, bench_summary_out);
        return cmd_render(render_map, render_start, render_flags, render_every,
                          render_format, render_out);
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 2;
    } catch (const MapLoadError& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 3;
    } catch (const MapParseError& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 3;
    } catch (const IoError& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 4;
    }
}
