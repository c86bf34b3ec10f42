#include "robsel/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace robsel {

namespace {

void append_row(std::string& out, const CostVector& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += ',';
        out += row[i].str();
    }
    out += '\n';
}

bool has_delta_line(const ProblemInstance& inst) { return inst.criterion == Criterion::Recoverable; }

void atomic_write(const std::string& path, const std::string& bytes) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("cannot open " + tmp + " for writing");
        os.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!os) throw std::runtime_error("short write to " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

Rational parse_number(const std::string& file, int line, const std::string& token) {
    try {
        Rational r = Rational::parse(token);
        if (r.is_negative()) throw std::invalid_argument("negative value");
        return r;
    } catch (const std::exception& e) {
        throw ParseError(file, line, "bad number '" + token + "': " + e.what());
    }
}

std::int64_t parse_int(const std::string& file, int line, const std::string& token) {
    Rational r = parse_number(file, line, token);
    if (!r.is_integer()) throw ParseError(file, line, "expected integer, got '" + token + "'");
    return r.num();
}

CostVector parse_row(const std::string& file, int line, const std::string& text, int n,
                     const char* what) {
    auto tokens = split(text, ',');
    if (static_cast<int>(tokens.size()) != n) {
        throw ParseError(file, line, std::string(what) + " has " + std::to_string(tokens.size()) +
                                         " values, expected " + std::to_string(n));
    }
    CostVector row;
    row.reserve(tokens.size());
    for (const auto& t : tokens) row.push_back(parse_number(file, line, t));
    return row;
}


std::string build_manifest(const ProblemInstance& inst, const std::string& hash) {
    std::ostringstream os;
    os << "criterion=" << to_string(inst.criterion) << "\n";
    switch (inst.uncertainty.kind) {
        case UncertaintySet::Kind::Discrete: os << "uncertainty=discrete\n"; break;
        case UncertaintySet::Kind::Interval: os << "uncertainty=interval\n"; break;
        case UncertaintySet::Kind::Budgeted:
            os << "uncertainty=budgeted\n";
            os << "budget_mode=" << to_string(inst.uncertainty.budgeted.mode) << "\n";
            break;
    }
    if (inst.criterion == Criterion::Recoverable) {
        os << "delta_semantics=" << to_string(inst.delta_semantics) << "\n";
    }
    os << "generator=" << inst.provenance.generator << "\n";
    os << "seed=" << inst.provenance.seed << "\n";
    os << "hash=fnv1a64:" << hash << "\n";
    if (inst.provenance.hiro) {
        const auto& h = *inst.provenance.hiro;
        os << "hiro_parent=" << h.parent_hash << "\n";
        os << "hiro_b=" << h.b.str() << "\n";
        os << "hiro_mode=" << h.mode << "\n";
        os << "hiro_iterations=" << h.iterations << "\n";
        if (!h.permutation.empty()) {
            os << "hiro_permutation=";
            for (std::size_t i = 0; i < h.permutation.size(); ++i) {
                if (i) os << ',';
                os << h.permutation[i];
            }
            os << "\n";
        }
        if (!h.note.empty()) os << "hiro_note=" << h.note << "\n";
    }
    return os.str();
}

} // namespace

std::string canonical_bytes(const ProblemInstance& inst) {
    require_valid(inst);
    std::string out;
    out += std::to_string(inst.n);
    out += ',';
    out += std::to_string(inst.p);
    const auto& u = inst.uncertainty;
    if (u.kind == UncertaintySet::Kind::Discrete) {
        out += ',';
        out += std::to_string(u.scenario_count());
    } else if (u.kind == UncertaintySet::Kind::Budgeted) {
        out += ',';
        out += u.budgeted.gamma.str();
    }
    if (has_delta_line(inst)) {
        out += ',';
        out += std::to_string(*inst.delta);
    }
    out += '\n';

    if (inst.first_stage_costs) append_row(out, *inst.first_stage_costs);
    switch (u.kind) {
        case UncertaintySet::Kind::Discrete:
            for (const auto& row : u.discrete.scenarios) append_row(out, row);
            break;
        case UncertaintySet::Kind::Interval:
            append_row(out, u.interval.lower);
            append_row(out, u.interval.deviation);
            break;
        case UncertaintySet::Kind::Budgeted:
            append_row(out, u.budgeted.lower);
            append_row(out, u.budgeted.deviation);
            break;
    }
    return out;
}

std::string content_hash(const std::string& bytes) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

std::string manifest_path(const std::string& instance_path) { return instance_path + ".manifest"; }

std::vector<std::string> write_instance(const ProblemInstance& inst, const std::string& path) {
    const std::string bytes = canonical_bytes(inst);
    const std::string manifest = build_manifest(inst, content_hash(bytes));
    atomic_write(path, bytes);
    atomic_write(manifest_path(path), manifest);
    return {path, manifest_path(path)};
}

ProblemInstance read_instance(const std::string& path) {
    std::ifstream mf(manifest_path(path), std::ios::binary);
    if (!mf) {
        throw IntegrityError("missing manifest " + manifest_path(path) +
                             " (criterion and budget mode are ambiguous without it)");
    }
    std::map<std::string, std::string> meta;
    {
        std::string line;
        while (std::getline(mf, line)) {
            if (line.empty()) continue;
            auto eq = line.find('=');
            if (eq == std::string::npos) throw IntegrityError("malformed manifest line: " + line);
            meta[line.substr(0, eq)] = line.substr(eq + 1);
        }
    }
    auto need = [&](const std::string& key) -> const std::string& {
        auto it = meta.find(key);
        if (it == meta.end()) throw IntegrityError("manifest missing key '" + key + "'");
        return it->second;
    };

    ProblemInstance inst;
    {
        const std::string& c = need("criterion");
        if (c == "min_max") inst.criterion = Criterion::MinMax;
        else if (c == "min_max_regret") inst.criterion = Criterion::MinMaxRegret;
        else if (c == "two_stage") inst.criterion = Criterion::TwoStage;
        else if (c == "recoverable") inst.criterion = Criterion::Recoverable;
        else throw IntegrityError("unknown criterion '" + c + "'");
    }
    const std::string& ukind = need("uncertainty");
    BudgetMode mode = BudgetMode::ContinuousItems;
    if (ukind == "budgeted") {
        const std::string& ms = need("budget_mode");
        if (ms == "continuous_items") mode = BudgetMode::ContinuousItems;
        else if (ms == "discrete_items") mode = BudgetMode::DiscreteItems;
        else if (ms == "variable_budget") mode = BudgetMode::VariableBudget;
        else throw IntegrityError("unknown budget_mode '" + ms + "'");
    }
    if (inst.criterion == Criterion::Recoverable) {
        const std::string& ds = need("delta_semantics");
        if (ds == "kept_at_least") inst.delta_semantics = DeltaSemantics::KeptAtLeast;
        else if (ds == "changed_at_most") inst.delta_semantics = DeltaSemantics::ChangedAtMost;
        else throw IntegrityError("unknown delta_semantics '" + ds + "'");
    }
    inst.provenance.generator = need("generator");
    inst.provenance.seed = std::stoull(need("seed"));
    if (meta.count("hiro_parent")) {
        HiroLineage h;
        h.parent_hash = meta["hiro_parent"];
        h.b = Rational::parse(need("hiro_b"));
        h.mode = need("hiro_mode");
        h.iterations = static_cast<int>(std::stol(need("hiro_iterations")));
        if (meta.count("hiro_permutation")) {
            for (const auto& tok : split(meta["hiro_permutation"], ',')) {
                h.permutation.push_back(static_cast<int>(std::stol(tok)));
            }
        }
        if (meta.count("hiro_note")) h.note = meta["hiro_note"];
        inst.provenance.hiro = std::move(h);
    }

    // body
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open " + path);
    std::vector<std::string> lines;
    {
        std::string line;
        while (std::getline(is, line)) lines.push_back(line);
    }
    if (lines.empty()) throw ParseError(path, 1, "empty instance file");

    const bool needs_first_stage =
        inst.criterion == Criterion::TwoStage || inst.criterion == Criterion::Recoverable;
    const bool has_delta = inst.criterion == Criterion::Recoverable;

    auto header = split(lines[0], ',');
    int expected_header = 2;
    if (ukind == "discrete") expected_header = 3;
    if (ukind == "budgeted") expected_header = 3;
    if (has_delta) ++expected_header;
    if (static_cast<int>(header.size()) != expected_header) {
        throw ParseError(path, 1, "header has " + std::to_string(header.size()) +
                                      " fields, expected " + std::to_string(expected_header));
    }
    std::size_t f = 0;
    inst.n = static_cast<int>(parse_int(path, 1, header[f++]));
    inst.p = static_cast<int>(parse_int(path, 1, header[f++]));
    int N = 0;
    Rational gamma;
    if (ukind == "discrete") N = static_cast<int>(parse_int(path, 1, header[f++]));
    if (ukind == "budgeted") gamma = parse_number(path, 1, header[f++]);
    if (has_delta) inst.delta = parse_int(path, 1, header[f++]);

    int expected_rows = 1 + (needs_first_stage ? 1 : 0);
    if (ukind == "discrete") expected_rows += N;
    else expected_rows += 2;
    if (static_cast<int>(lines.size()) != expected_rows) {
        int at = std::min<int>(static_cast<int>(lines.size()), expected_rows) + 1;
        throw ParseError(path, at, "file has " + std::to_string(lines.size()) + " lines, expected " +
                                       std::to_string(expected_rows));
    }

    int row = 1;
    if (needs_first_stage) {
        inst.first_stage_costs = parse_row(path, row + 1, lines[static_cast<std::size_t>(row)], inst.n,
                                           "first-stage line");
        ++row;
    }
    if (ukind == "discrete") {
        std::vector<CostVector> scenarios;
        for (int j = 0; j < N; ++j) {
            scenarios.push_back(parse_row(path, row + 1, lines[static_cast<std::size_t>(row)], inst.n,
                                          "scenario line"));
            ++row;
        }
        inst.uncertainty = UncertaintySet::make_discrete(std::move(scenarios));
    } else {
        CostVector lower = parse_row(path, row + 1, lines[static_cast<std::size_t>(row)], inst.n,
                                     ukind == "interval" ? "lower-bound line" : "lower-bound line");
        ++row;
        CostVector dev = parse_row(path, row + 1, lines[static_cast<std::size_t>(row)], inst.n,
                                   "deviation line");
        ++row;
        if (ukind == "interval") {
            inst.uncertainty = UncertaintySet::make_interval(std::move(lower), std::move(dev));
        } else {
            inst.uncertainty = UncertaintySet::make_budgeted(std::move(lower), std::move(dev), gamma, mode);
        }
    }

    require_valid(inst);

    // integrity: stored hash must match the canonical bytes we just read
    const std::string& stored = need("hash");
    const std::string expected = "fnv1a64:" + content_hash(canonical_bytes(inst));
    if (stored != expected) {
        throw IntegrityError("hash mismatch for " + path + ": manifest " + stored + ", content " +
                             expected);
    }
    return inst;
}

void write_results(const std::vector<ResultRecord>& records, const std::string& path) {
    std::ostringstream os;
    os << "instance_id,generator,n,p,N,gamma,delta,b,hiro_mode,status,objective,wall_time_s,nodes,seed\n";
    for (const auto& r : records) {
        os << r.instance_id << ',' << r.generator << ',' << r.n << ',' << r.p << ',';
        if (r.N > 0) os << r.N;
        os << ',';
        if (r.gamma) os << r.gamma->str();
        os << ',';
        if (r.delta) os << *r.delta;
        os << ',';
        if (r.hiro_b) os << r.hiro_b->str();
        os << ',' << r.hiro_mode << ',' << r.status << ',';
        if (r.objective_exact) {
            os << r.objective_exact->str();
        } else {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.9g", r.objective);
            os << buf;
        }
        char tbuf[32];
        std::snprintf(tbuf, sizeof tbuf, "%.3f", r.wall_time_seconds);
        os << ',' << tbuf << ',' << r.nodes << ',' << r.seed << "\n";
    }
    atomic_write(path, os.str());
}

} // namespace robsel
