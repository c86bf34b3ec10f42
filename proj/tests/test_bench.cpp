#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "robsel/bench.hpp"
#include "robsel/formulations.hpp"

using namespace robsel;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("robsel_bench_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    REQUIRE(is);
    return std::string(std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>());
}

BenchCell cell(const std::string& gen, int n, int p, int N = 0, std::int64_t gamma = 0,
               std::optional<std::int64_t> delta = std::nullopt) {
    BenchCell c;
    c.gen = *GeneratorId::parse(gen);
    c.n = n;
    c.p = p;
    c.N = N;
    c.gamma = Rational(gamma);
    c.delta = delta;
    return c;
}

} // namespace

TEST_CASE("record count equals the grid expansion") {
    TempDir dir;
    ExperimentConfig cfg;
    cfg.cells = {cell("MM-D-U", 6, 3, 4), cell("MM-D-1", 6, 3, 4), cell("MMR-I-2", 6, 3)};
    cfg.seeds_per_cell = 5;
    cfg.out_dir = dir.file("out");
    auto result = run_experiment(cfg);
    CHECK(result.records.size() == 15);
    for (const auto& r : result.records) CHECK(r.status == "optimal");
}

TEST_CASE("empty grid writes a header-only csv") {
    TempDir dir;
    ExperimentConfig cfg;
    cfg.cells = {};
    cfg.out_dir = dir.file("out");
    auto result = run_experiment(cfg);
    CHECK(result.records.empty());
    CHECK(slurp(result.results_path) ==
          "instance_id,generator,n,p,N,gamma,delta,b,hiro_mode,status,objective,wall_time_s,nodes,seed\n");
}

TEST_CASE("batch determinism: identical config twice") {
    TempDir dir;
    auto run = [&](const std::string& sub) {
        ExperimentConfig cfg;
        cfg.cells = {cell("MM-D-2", 8, 3, 4), cell("RR-DB-1", 5, 2, 0, 2, 1),
                     cell("2ST-CB-2", 6, 3, 0, 10)};
        cfg.seeds_per_cell = 3;
        cfg.out_dir = dir.file(sub);
        return run_experiment(cfg);
    };
    auto a = run("a");
    auto b = run("b");
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        CHECK(a.records[i].instance_id == b.records[i].instance_id);
        CHECK(a.records[i].status == b.records[i].status);
        CHECK(a.records[i].objective == b.records[i].objective);
        CHECK(a.records[i].nodes == b.records[i].nodes);
        // the persisted instance files are byte-identical
        auto fa = dir.file("a/" + a.records[i].instance_id + ".csv");
        auto fb = dir.file("b/" + b.records[i].instance_id + ".csv");
        CHECK(slurp(fa) == slurp(fb));
    }
}

TEST_CASE("persisted instances re-read and re-solve to the recorded objective") {
    TempDir dir;
    ExperimentConfig cfg;
    cfg.cells = {cell("MMR-D-1", 7, 3, 3), cell("2ST-DB-U", 6, 3, 0, 2)};
    cfg.seeds_per_cell = 2;
    cfg.out_dir = dir.file("out");
    auto result = run_experiment(cfg);
    for (const auto& r : result.records) {
        REQUIRE(r.status == "optimal");
        auto inst = read_instance(dir.file("out/" + r.instance_id + ".csv"));
        auto again = solve_robust(inst);
        REQUIRE(r.objective_exact.has_value());
        CHECK(again.value == *r.objective_exact);
    }
}

TEST_CASE("per-instance failures become error rows") {
    TempDir dir;
    ExperimentConfig cfg;
    auto bad = cell("MM-D-U", 6, 3, 4);
    bad.p = 9; // invalid shape: p > n
    cfg.cells = {bad, cell("MM-D-U", 6, 3, 4)};
    cfg.seeds_per_cell = 1;
    cfg.out_dir = dir.file("out");
    auto result = run_experiment(cfg);
    REQUIRE(result.records.size() == 2);
    CHECK(result.records[0].status == "error");
    CHECK(result.records[1].status == "optimal");
}

TEST_CASE("hardened cells carry their parameters into the results") {
    TempDir dir;
    ExperimentConfig cfg;
    auto c = cell("MM-D-U", 5, 2, 2);
    c.hiro_b = Rational(1);
    c.hiro_mode = HiroMode::FirstAndSecondStage;
    cfg.cells = {c};
    cfg.seeds_per_cell = 1;
    cfg.hiro_time_limit = 30.0;
    cfg.out_dir = dir.file("out");
    auto result = run_experiment(cfg);
    REQUIRE(result.records.size() == 1);
    CHECK(result.records[0].status == "optimal");
    REQUIRE(result.records[0].hiro_b.has_value());
    CHECK(*result.records[0].hiro_b == Rational(1));
    auto csv = slurp(result.results_path);
    CHECK(csv.find("first_and_second_stage") != std::string::npos);
}

TEST_CASE("presets expand to finite grids and desk trims apply") {
    for (const auto& name : preset_names()) {
        auto cfg = preset_config(name);
        CAPTURE(name);
        CHECK(!cfg.cells.empty());
        for (const auto& c : cfg.cells) {
            CHECK(c.n <= 30);
            CHECK(c.p >= 1);
            CHECK(c.p <= c.n);
        }
        auto full = preset_config(name, true);
        CHECK(full.solve_time_limit == 600.0);
        CHECK(full.cells.size() >= cfg.cells.size());
    }
    CHECK_THROWS(preset_config("no-such-preset"));
}

TEST_CASE("config file parsing") {
    TempDir dir;
    auto path = dir.file("exp.cfg");
    {
        std::ofstream os(path);
        os << "# comment\n";
        os << "seeds = 2\n";
        os << "seed_base = 11\n";
        os << "time_limit = 5\n";
        os << "out = " << dir.file("cfg_out") << "\n";
        os << "cell = gen=MM-D-U n=5 p=2 N=3\n";
        os << "cell = gen=RR-CB-2 n=6 p=3 gamma=12 delta=1\n";
    }
    auto cfg = parse_experiment_config(path);
    CHECK(cfg.seeds_per_cell == 2);
    CHECK(cfg.seed_base == 11);
    CHECK(cfg.cells.size() == 2);
    CHECK(cfg.cells[1].gen.str() == "RR-CB-2");
    auto result = run_experiment(cfg);
    CHECK(result.records.size() == 4);

    std::ofstream bad(path, std::ios::trunc);
    bad << "nonsense line\n";
    bad.close();
    CHECK_THROWS(parse_experiment_config(path));
}

TEST_CASE("threaded runs produce the same records as serial runs") {
    TempDir dir;
    ExperimentConfig cfg;
    cfg.cells = {cell("MM-D-U", 7, 3, 4), cell("MM-B-1", 7, 3, 0, 2), cell("MMR-I-1", 7, 3)};
    cfg.seeds_per_cell = 3;
    cfg.out_dir = dir.file("serial");
    auto serial = run_experiment(cfg);
    cfg.out_dir = dir.file("parallel");
    cfg.threads = 4;
    auto parallel = run_experiment(cfg);
    REQUIRE(serial.records.size() == parallel.records.size());
    for (std::size_t i = 0; i < serial.records.size(); ++i) {
        CHECK(serial.records[i].instance_id == parallel.records[i].instance_id);
        CHECK(serial.records[i].objective == parallel.records[i].objective);
        CHECK(serial.records[i].status == parallel.records[i].status);
        CHECK(serial.records[i].nodes == parallel.records[i].nodes);
    }
}
