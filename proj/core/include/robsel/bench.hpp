#ifndef ROBSEL_BENCH_HPP
#define ROBSEL_BENCH_HPP

#include <optional>
#include <string>
#include <vector>

#include "robsel/hiro.hpp"
#include "robsel/io.hpp"
#include "robsel/samplers.hpp"

namespace robsel {

/// One grid cell: a generator with a shape, optionally hardened before
/// solving. Seeds are supplied by the experiment configuration.
struct BenchCell {
    GeneratorId gen;
    int n = 0;
    int p = 0;
    int N = 0;
    Rational gamma;
    std::optional<std::int64_t> delta;
    std::optional<Rational> hiro_b;
    std::optional<HiroMode> hiro_mode; // required for budgeted/stage hardening
};

struct ExperimentConfig {
    std::vector<BenchCell> cells;
    int seeds_per_cell = 5;
    std::uint64_t seed_base = 1;
    double solve_time_limit = 10.0;
    std::int64_t node_limit = 5'000'000;
    double hiro_time_limit = 30.0;
    std::string out_dir = "bench_out";
    int threads = 1;
};

/// Names of the built-in experiment presets.
std::vector<std::string> preset_names();

/// Expands a preset into cells. Desk scale trims each cell to n <= 30
/// (proportionally adjusting p, gamma, delta and capping N at 500) and skips
/// hardening cells whose master models would be oversized; `full` keeps the
/// published grids and a 600-second limit. `scale` shrinks every cell
/// further, with floors.
ExperimentConfig preset_config(const std::string& name, bool full = false, double scale = 1.0);

/// Parses the plain-text config format (key = value lines plus repeated
/// `cell = k=v ...` lines; '#' starts a comment).
ExperimentConfig parse_experiment_config(const std::string& path);

struct ExperimentOutput {
    std::vector<ResultRecord> records;
    std::string results_path;
    std::string summary_path;
};

/// Samples, optionally hardens, persists and solves every (cell, seed)
/// combination. Failures become rows with an error status; the batch never
/// aborts. Deterministic for a fixed configuration (wall times aside).
ExperimentOutput run_experiment(const ExperimentConfig& cfg);

} // namespace robsel

#endif
