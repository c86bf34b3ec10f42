// Command-line front end: generate, harden, solve, evaluate and batch-run
// robust selection instances.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "robsel/bench.hpp"
#include "robsel/evaluate.hpp"
#include "robsel/formulations.hpp"
#include "robsel/hiro.hpp"
#include "robsel/io.hpp"
#include "robsel/milp/solve.hpp"
#include "robsel/samplers.hpp"

namespace {

using namespace robsel;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFailure = 2;

HiroMode parse_mode_or_throw(const std::string& s) {
    if (s == "first_stage_only") return HiroMode::FirstStageOnly;
    if (s == "first_and_second_stage" || s == "scenarios") return HiroMode::FirstAndSecondStage;
    if (s == "lower_bounds") return HiroMode::LowerBounds;
    if (s == "deviations") return HiroMode::Deviations;
    if (s == "both" || s == "interval") return HiroMode::Both;
    throw CLI::ValidationError("--mode", "unknown mode '" + s + "'");
}

SelectionSolution read_solution_file(const std::string& path, int n, SolutionRole role) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open solution file " + path);
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("empty solution file " + path);
    SelectionSolution sol;
    sol.role = role;
    std::string tok;
    for (char ch : line + ",") {
        if (ch == ',') {
            if (tok == "0") {
                sol.chosen.push_back(0);
            } else if (tok == "1") {
                sol.chosen.push_back(1);
            } else {
                throw std::runtime_error("solution entries must be 0 or 1, got '" + tok + "'");
            }
            tok.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            tok += ch;
        }
    }
    if (static_cast<int>(sol.chosen.size()) != n) {
        throw std::runtime_error("solution has " + std::to_string(sol.chosen.size()) +
                                 " entries, instance has n=" + std::to_string(n));
    }
    return sol;
}

int cmd_gen(const std::string& generator, int n, int p, int N, const std::string& gamma,
            std::optional<std::int64_t> delta, const std::string& delta_semantics,
            std::uint64_t seed, int count, const std::string& outdir) {
    auto gid = GeneratorId::parse(generator);
    if (!gid) {
        std::cerr << "unknown generator '" << generator << "'; see gen --list\n";
        return kExitUsage;
    }
    ShapeParams sp;
    sp.n = n;
    sp.p = p;
    sp.N = gid->uses_discrete_set() ? N : 0;
    if (gid->uses_budgeted_set()) sp.gamma = Rational::parse(gamma);
    if (gid->needs_delta()) sp.delta = delta;
    if (!delta_semantics.empty()) {
        sp.delta_semantics = delta_semantics == "kept_at_least" ? DeltaSemantics::KeptAtLeast
                                                                : DeltaSemantics::ChangedAtMost;
    }
    std::filesystem::create_directories(outdir);
    for (int k = 0; k < count; ++k) {
        sp.seed = seed + static_cast<std::uint64_t>(k);
        ProblemInstance inst = sample_instance(*gid, sp);
        std::string path = outdir + "/" + gid->str() + "_n" + std::to_string(n) + "_p" +
                           std::to_string(p) + "_s" + std::to_string(sp.seed) + ".csv";
        auto written = write_instance(inst, path);
        std::cout << written[0] << "\n";
    }
    return kExitOk;
}

int cmd_solve(const std::string& path, double time_limit, std::int64_t node_limit) {
    ProblemInstance inst = read_instance(path);
    milp::SolverConfig cfg;
    cfg.time_limit_seconds = time_limit;
    cfg.node_limit = node_limit;
    auto outcome = solve_robust(inst, cfg);
    std::cout << "status: " << milp::to_string(outcome.status) << "\n";
    if (outcome.raw.has_solution()) {
        std::cout << "objective: " << outcome.value.str() << "\n";
        std::cout << "solution:";
        for (int i : outcome.solution.support()) std::cout << " " << i;
        std::cout << "\n";
    }
    std::cout << "nodes: " << outcome.raw.node_count << "\n";
    std::cout << "lp_iterations: " << outcome.raw.lp_iterations << "\n";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", outcome.raw.wall_time_seconds);
    std::cout << "wall_time_s: " << buf << "\n";
    return outcome.raw.has_solution() ? kExitOk : kExitFailure;
}

int cmd_oracle(const std::string& path, int max_n) {
    ProblemInstance inst = read_instance(path);
    BruteForceLimits limits;
    limits.max_n = max_n;
    auto [x, value] = brute_force_robust_opt(inst, limits);
    std::cout << "objective: " << value.str() << "\n";
    std::cout << "solution:";
    for (int i : x.support()) std::cout << " " << i;
    std::cout << "\n";
    return kExitOk;
}

int cmd_eval(const std::string& path, const std::string& solution_path) {
    ProblemInstance inst = read_instance(path);
    SolutionRole role = inst.criterion == Criterion::TwoStage ? SolutionRole::PartialFirstStage
                                                              : SolutionRole::Full;
    SelectionSolution x = read_solution_file(solution_path, inst.n, role);
    auto rep = evaluate_robust(x, inst);
    std::cout << "objective: " << rep.objective.str() << "\n";
    if (rep.witness_scenario) std::cout << "witness_scenario: " << *rep.witness_scenario + 1 << "\n";
    if (rep.witness_costs) {
        std::cout << "witness_costs:";
        for (const auto& c : *rep.witness_costs) std::cout << " " << c.str();
        std::cout << "\n";
    }
    if (rep.second_stage) {
        std::cout << "second_stage:";
        for (int i : rep.second_stage->support()) std::cout << " " << i;
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_harden(const std::vector<std::string>& paths, const std::string& b_text,
               const std::string& mode_text, double time_limit, int max_iterations,
               const std::string& outdir) {
    Rational b = Rational::parse(b_text);
    HiroConfig cfg;
    cfg.b = b;
    cfg.time_limit_seconds = time_limit;
    cfg.max_iterations = max_iterations;
    cfg.solver.time_limit_seconds = time_limit;
    if (!mode_text.empty()) cfg.mode = parse_mode_or_throw(mode_text);
    std::filesystem::create_directories(outdir);
    for (const auto& path : paths) {
        ProblemInstance inst = read_instance(path);
        ProblemInstance hardened;
        if (inst.uncertainty.kind == UncertaintySet::Kind::Discrete) {
            auto [out, trace] = harden_iterative(inst, cfg);
            hardened = std::move(out);
            std::cout << path << ": input value " << trace.input_value.str() << ", hardened value "
                      << trace.best_value.str() << ", iterations " << trace.iterations.size()
                      << (trace.converged ? " (converged)" : " (stopped)") << "\n";
        } else if (inst.uncertainty.kind == UncertaintySet::Kind::Interval) {
            hardened = harden_regret_interval(inst, cfg);
        } else {
            hardened = harden_budgeted(inst, cfg);
        }
        std::string stem = std::filesystem::path(path).stem().string();
        std::string out_path = outdir + "/" + stem + "_h" + b.str() + ".csv";
        write_instance(hardened, out_path);
        std::cout << out_path << "\n";
    }
    return kExitOk;
}

int cmd_validate(const std::vector<std::string>& paths) {
    bool all_ok = true;
    for (const auto& path : paths) {
        try {
            ProblemInstance inst = read_instance(path);
            auto violations = check_sampler_invariants(inst);
            bool known_generator = GeneratorId::parse(inst.provenance.generator).has_value();
            if (!known_generator) violations.clear(); // manual/hardened instances: format check only
            if (violations.empty()) {
                std::cout << path << ": ok\n";
            } else {
                all_ok = false;
                for (const auto& v : violations) std::cout << path << ": " << v << "\n";
            }
        } catch (const std::exception& e) {
            all_ok = false;
            std::cout << e.what() << "\n";
        }
    }
    return all_ok ? kExitOk : kExitFailure;
}

int cmd_bench(const std::string& config_path, const std::string& preset, bool full, double scale,
              int seeds, const std::string& out, int threads, bool list) {
    if (list) {
        for (const auto& name : preset_names()) std::cout << name << "\n";
        return kExitOk;
    }
    ExperimentConfig cfg;
    if (!config_path.empty()) {
        cfg = parse_experiment_config(config_path);
    } else if (!preset.empty()) {
        cfg = preset_config(preset, full, scale);
    } else {
        std::cerr << "bench needs --config or --preset (or --list-presets)\n";
        return kExitUsage;
    }
    if (seeds > 0) cfg.seeds_per_cell = seeds;
    if (!out.empty()) cfg.out_dir = out;
    if (threads > 0) cfg.threads = threads;
    auto result = run_experiment(cfg);
    std::size_t errors = 0;
    for (const auto& r : result.records) {
        if (r.status == "error") ++errors;
    }
    std::cout << result.records.size() << " records -> " << result.results_path << "\n";
    std::cout << "summary -> " << result.summary_path << "\n";
    if (errors) std::cout << errors << " records with error status\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"robust selection benchmark toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "sample instances from a generator");
    std::string generator, gamma = "0", delta_semantics, outdir = ".";
    int n = 0, p = 0, N = 0, count = 1;
    std::int64_t delta_value = -1;
    std::uint64_t seed = 1;
    bool list_generators = false;
    gen->add_option("--generator", generator, "generator id, e.g. MM-D-U");
    gen->add_option("--n", n, "item count");
    gen->add_option("--p", p, "selection cardinality");
    gen->add_option("--N", N, "scenario count (discrete families)");
    gen->add_option("--gamma", gamma, "budget (budgeted families)");
    gen->add_option("--delta", delta_value, "recovery parameter (recoverable families)");
    gen->add_option("--delta-semantics", delta_semantics,
                    "kept_at_least or changed_at_most (default: family convention)");
    gen->add_option("--seed", seed, "first seed");
    gen->add_option("--count", count, "number of instances (consecutive seeds)");
    gen->add_option("--out", outdir, "output directory");
    gen->add_flag("--list", list_generators, "list the generator catalog");

    // solve
    auto* solve = app.add_subcommand("solve", "solve an instance with the built-in engine");
    std::string solve_path;
    double time_limit = 600.0;
    std::int64_t node_limit = 1'000'000'000;
    solve->add_option("instance", solve_path, "instance file")->required();
    solve->add_option("--time-limit", time_limit, "seconds");
    solve->add_option("--node-limit", node_limit, "branch-and-bound node cap");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "brute-force solve (size-guarded)");
    std::string oracle_path;
    int oracle_max_n = 16;
    oracle->add_option("instance", oracle_path, "instance file")->required();
    oracle->add_option("--max-n", oracle_max_n, "size guard");

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate a solution file against an instance");
    std::string eval_path, eval_solution;
    eval->add_option("instance", eval_path, "instance file")->required();
    eval->add_option("solution", eval_solution, "comma-separated 0/1 line")->required();

    // harden
    auto* harden = app.add_subcommand("harden", "harden instances");
    std::vector<std::string> harden_paths;
    std::string harden_b = "1", harden_mode;
    double harden_time = 60.0;
    int harden_iters = 32;
    std::string harden_out = ".";
    harden->add_option("instances", harden_paths, "instance files")->required();
    harden->add_option("--b", harden_b, "per-coefficient budget");
    harden->add_option("--mode", harden_mode,
                       "first_stage_only|first_and_second_stage|lower_bounds|deviations|both");
    harden->add_option("--time-limit", harden_time, "seconds per instance");
    harden->add_option("--max-iterations", harden_iters, "iteration cap");
    harden->add_option("--out", harden_out, "output directory");

    // validate
    auto* validate = app.add_subcommand("validate", "check file format and sampler invariants");
    std::vector<std::string> validate_paths;
    validate->add_option("instances", validate_paths, "instance files")->required();

    // bench
    auto* bench = app.add_subcommand("bench", "run an experiment grid");
    std::string bench_config, bench_preset, bench_out;
    bool bench_full = false, bench_list = false;
    double bench_scale = 1.0;
    int bench_seeds = 0, bench_threads = 0;
    bench->add_option("--config", bench_config, "experiment config file");
    bench->add_option("--preset", bench_preset, "preset name");
    bench->add_flag("--full", bench_full, "use the full published grids (600 s limits)");
    bench->add_option("--scale", bench_scale, "additional shrink factor");
    bench->add_option("--seeds", bench_seeds, "seeds per cell");
    bench->add_option("--out", bench_out, "output directory");
    bench->add_option("--threads", bench_threads, "parallel instances");
    bench->add_flag("--list-presets", bench_list, "list preset names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) {
            if (list_generators) {
                for (const auto& info : generator_info()) {
                    std::cout << info.id.str() << "\t" << info.required_params << "\t"
                              << info.invariants << "\n";
                }
                return kExitOk;
            }
            if (generator.empty() || n <= 0 || p <= 0) {
                std::cerr << "gen needs --generator, --n, --p\n";
                return kExitUsage;
            }
            std::optional<std::int64_t> delta =
                delta_value >= 0 ? std::optional<std::int64_t>(delta_value) : std::nullopt;
            return cmd_gen(generator, n, p, N, gamma, delta, delta_semantics, seed, count, outdir);
        }
        if (solve->parsed()) return cmd_solve(solve_path, time_limit, node_limit);
        if (oracle->parsed()) return cmd_oracle(oracle_path, oracle_max_n);
        if (eval->parsed()) return cmd_eval(eval_path, eval_solution);
        if (harden->parsed()) {
            return cmd_harden(harden_paths, harden_b, harden_mode, harden_time, harden_iters,
                              harden_out);
        }
        if (validate->parsed()) return cmd_validate(validate_paths);
        if (bench->parsed()) {
            return cmd_bench(bench_config, bench_preset, bench_full, bench_scale, bench_seeds,
                             bench_out, bench_threads, bench_list);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
