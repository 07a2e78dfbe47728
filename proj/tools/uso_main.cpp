// uso: command-line surface over the library.  Subcommands: gen, verify,
// period, solve, enum, bench.  Reports are key=value lines, or one JSON
// object with --json; bench emits CSV.  Exit codes: 0 success, 1 usage or
// parse failure, 2 verification failure, 3 qpf recovery exhaustion.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "uso/cube.hpp"
#include "uso/outmap.hpp"
#include "uso/period.hpp"
#include "uso/qpf.hpp"
#include "uso/solvers.hpp"
#include "uso/verify.hpp"

namespace {

using uso::Mask;
using uso::Outmap;

// Collects report fields in insertion order and emits them either as
// key=value lines or as a single JSON object.
class Report {
  public:
    explicit Report(bool as_json) : as_json_(as_json) {}

    void add(const std::string& key, const nlohmann::ordered_json& value) {
        if (as_json_) {
            obj_[key] = value;
        } else {
            lines_.push_back(key + "=" + render(value));
        }
    }

    void add_mask(const std::string& key, Mask m) {
        add(key, m);
        add(key + "_set", uso::set_notation(m));
    }

    void flush() const {
        if (as_json_) {
            std::cout << obj_.dump(2) << "\n";
        } else {
            for (const std::string& line : lines_) std::cout << line << "\n";
        }
    }

  private:
    static std::string render(const nlohmann::ordered_json& value) {
        if (value.is_string()) return value.get<std::string>();
        return value.dump();
    }

    bool as_json_;
    nlohmann::ordered_json obj_ = nlohmann::ordered_json::object();
    std::vector<std::string> lines_;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw uso::ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (!in.good() && !in.eof()) throw uso::ParseError("cannot read " + path);
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
    if (!out.good()) throw std::runtime_error("cannot write " + path);
}

Outmap load_outmap(const std::string& path) { return uso::deserialize(read_file(path)); }

// Shared solve/bench options.
struct SolveOpts {
    std::string method;
    std::uint64_t seed = 0;
    int t = 0;
    int samples = 20;
    int attempts = 5;
    std::string oracle = "brute";
    std::string start = "0";
};

struct SolveRow {
    Mask sink = 0;
    std::uint64_t queries = 0;
    std::optional<std::uint64_t> period;
    std::optional<int> samples_used;
    std::optional<int> validation_calls;
    std::optional<std::vector<std::uint64_t>> measured;
    std::optional<int> attempts;
    std::optional<std::uint64_t> steps;
};

SolveRow run_method(const Outmap& m, const SolveOpts& o) {
    SolveRow row;
    if (o.method == "scan") {
        row.sink = uso::global_sink(m);
        row.queries = m.size();  // the scan reads the full table
    } else if (o.method == "period") {
        const uso::PeriodResult r = uso::orbit_period(m, 0);
        row.sink = r.sink_candidate;
        row.queries = r.period;
        row.period = r.period;
    } else if (o.method == "naive-walk") {
        const uso::PeriodResult r = uso::orbit_period(m, 0);
        row.sink = r.sink_candidate;
        row.queries = uso::naive_walk_count(m);
        row.period = r.period;
    } else if (o.method == "qpf") {
        uso::QpfConfig cfg;
        cfg.t = o.t;
        cfg.samples = o.samples;
        cfg.seed = o.seed;
        const uso::SinkSearch s = uso::quantum_find_sink(m, cfg, o.attempts);
        row.sink = s.sink;
        row.queries = static_cast<std::uint64_t>(s.total_queries);
        row.period = s.last.recovered_period;
        row.samples_used = s.last.queries_used;
        row.validation_calls = s.total_validation_calls;
        row.measured = s.last.measured;
        row.attempts = s.attempts;
    } else if (o.method == "facet") {
        uso::DecisionOracle oracle = o.oracle == "period" ? uso::period_decision(m)
                                                          : uso::brute_force_decision(m);
        const uso::FacetSearchResult r = uso::solve_by_facet_decision(m, oracle);
        row.sink = r.sink;
        row.queries = static_cast<std::uint64_t>(r.decision_calls);
    } else if (o.method == "random-edge") {
        const uso::WalkResult r = uso::random_edge_walk(m, uso::parse_mask(o.start), o.seed);
        row.sink = r.sink;
        row.queries = r.queries;
        row.steps = r.steps;
    } else {
        throw CLI::ValidationError("--method", "unknown method " + o.method);
    }
    return row;
}

int cmd_gen(const std::string& family, int n, const std::string& a, std::uint64_t seed,
            bool seed_given, const std::string& lower, const std::string& upper,
            const std::string& dir, const std::string& out, Report& report) {
    std::optional<Outmap> m;
    if (family == "uniform") {
        m = uso::uniform(n, uso::parse_mask(a));
    } else if (family == "psi") {
        m = uso::psi(n);
    } else if (family == "random") {
        if (!seed_given) throw CLI::ValidationError("--seed", "random family requires a seed");
        m = uso::random_uso(n, seed);
    } else if (family == "product") {
        if (lower.empty() || upper.empty()) {
            throw CLI::ValidationError("--lower/--upper", "product family requires two input maps");
        }
        if (dir != "up" && dir != "down") {
            throw CLI::ValidationError("--dir", "product family requires --dir up|down");
        }
        m = uso::combine(load_outmap(lower), load_outmap(upper),
                         dir == "up" ? uso::StackDir::up : uso::StackDir::down);
    } else {
        throw CLI::ValidationError("--family", "unknown family " + family);
    }
    const std::string text = uso::serialize(*m);
    if (out.empty()) {
        std::cout << text;
        return 0;
    }
    write_file(out, text);
    report.add("family", family);
    report.add("n", m->dim());
    report.add("out", out);
    report.flush();
    return 0;
}

int cmd_verify(const std::string& path, Report& report) {
    const Outmap m = load_outmap(path);
    report.add("n", m.dim());
    const bool orientation = uso::is_orientation(m);
    report.add("orientation", orientation);
    report.add("bijection", uso::is_bijection(m));
    bool uso_known = false;
    bool uso_ok = false;
    if (m.dim() <= uso::kMaxVerifyDim) {
        uso_known = true;
        uso_ok = uso::is_uso(m);
        report.add("uso", uso_ok);
    } else {
        std::cerr << "warning: dimension " << m.dim()
                  << " above the exhaustive verification cap; uso left unverified\n";
        report.add("uso", "unverified");
    }
    try {
        report.add_mask("sink", uso::global_sink(m));
    } catch (const uso::NotUsoError&) {
        report.add("sink", "absent");
    }
    report.flush();
    return (uso_known && uso_ok) ? 0 : 2;
}

int cmd_period(const std::string& path, const std::string& start, Report& report) {
    const Outmap m = load_outmap(path);
    const Mask s = uso::parse_mask(start);
    const uso::PeriodResult r = uso::orbit_period(m, s);
    report.add("n", m.dim());
    report.add_mask("start", r.start);
    report.add("period", r.period);
    report.add_mask("orbit_last", r.sink_candidate);
    if (s == 0) report.add_mask("sink", r.sink_candidate);
    report.flush();
    return 0;
}

int cmd_solve(const std::string& path, const SolveOpts& opts, Report& report) {
    const Outmap m = load_outmap(path);
    if (m.dim() <= uso::kMaxVerifyDim) {
        if (!uso::is_uso(m)) {
            std::cerr << "error: input is not a unique sink orientation\n";
            return 2;
        }
    } else {
        std::cerr << "warning: dimension above the verification cap; solving unvalidated input\n";
    }
    const SolveRow row = run_method(m, opts);
    report.add("method", opts.method);
    report.add("n", m.dim());
    report.add_mask("sink", row.sink);
    report.add("queries", row.queries);
    if (row.period) report.add("period", *row.period);
    if (row.samples_used) report.add("samples_used", *row.samples_used);
    if (row.validation_calls) report.add("validation_calls", *row.validation_calls);
    if (row.measured) report.add("measured", *row.measured);
    if (row.attempts) report.add("attempts", *row.attempts);
    if (row.steps) report.add("steps", *row.steps);
    report.flush();
    return 0;
}

int cmd_enum(int n, Report& report) {
    const std::vector<Outmap> all = uso::enumerate_usos(n);
    report.add("n", n);
    report.add("count", all.size());
    report.flush();
    return 0;
}

std::pair<int, int> parse_range(const std::string& text) {
    const std::size_t dots = text.find("..");
    if (dots == std::string::npos) {
        const int v = std::stoi(text);
        return {v, v};
    }
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    if (lo < 1 || hi < lo) throw CLI::ValidationError("--n-range", "malformed range " + text);
    return {lo, hi};
}

int cmd_bench(const std::string& family, const std::string& n_range,
              const std::string& methods_csv, int seeds, const std::string& a, int t,
              int samples, const std::string& csv_path) {
    const auto [n_lo, n_hi] = parse_range(n_range);
    std::vector<std::string> methods;
    {
        std::stringstream ss(methods_csv);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (!item.empty()) methods.push_back(item);
        }
    }
    if (methods.empty()) throw CLI::ValidationError("--methods", "no methods given");
    if (seeds < 1) throw CLI::ValidationError("--seeds", "need at least one seed");

    std::ostringstream csv;
    csv << "family,n,seed,method,sink,sink_set,queries,period,samples_used,"
           "validation_calls,status\n";
    for (int n = n_lo; n <= n_hi; ++n) {
        for (int seed = 0; seed < seeds; ++seed) {
            std::optional<Outmap> m;
            if (family == "psi") {
                m = uso::psi(n);
            } else if (family == "uniform") {
                m = uso::uniform(n, uso::parse_mask(a));
            } else if (family == "random") {
                m = uso::random_uso(n, static_cast<std::uint64_t>(seed));
            } else {
                throw CLI::ValidationError("--family", "unknown bench family " + family);
            }
            for (const std::string& method : methods) {
                SolveOpts o;
                o.method = method;
                o.seed = static_cast<std::uint64_t>(seed);
                o.t = t;
                o.samples = samples;
                csv << family << ',' << n << ',' << seed << ',' << method << ',';
                try {
                    const SolveRow row = run_method(*m, o);
                    csv << row.sink << ",\"" << uso::set_notation(row.sink) << "\","
                        << row.queries << ',';
                    if (row.period) csv << *row.period;
                    csv << ',';
                    if (row.samples_used) csv << *row.samples_used;
                    csv << ',';
                    if (row.validation_calls) csv << *row.validation_calls;
                    csv << ",ok\n";
                } catch (const uso::QpfExhaustedError&) {
                    csv << ",,,,,,exhausted\n";
                } catch (const uso::WalkCapExceeded&) {
                    csv << ",,,,,,cap-exceeded\n";
                }
            }
        }
    }
    if (csv_path.empty() || csv_path == "-") {
        std::cout << csv.str();
    } else {
        write_file(csv_path, csv.str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"unique sink orientation toolkit"};
    app.fallthrough();
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit a single JSON object instead of key=value lines");

    // gen
    auto* gen = app.add_subcommand("gen", "generate an outmap file");
    std::string g_family, g_a = "0", g_lower, g_upper, g_dir, g_out;
    int g_n = 0;
    std::uint64_t g_seed = 0;
    gen->add_option("--family", g_family, "uniform|psi|product|random")->required();
    gen->add_option("--n", g_n, "dimension");
    gen->add_option("--a", g_a, "sink vertex for the uniform family (mask or {..})");
    auto* g_seed_opt = gen->add_option("--seed", g_seed, "seed for the random family");
    gen->add_option("--lower", g_lower, "lower-facet map file (product)");
    gen->add_option("--upper", g_upper, "upper-facet map file (product)");
    gen->add_option("--dir", g_dir, "up|down (product)");
    gen->add_option("--out", g_out, "output path (stdout when omitted)");

    // verify
    auto* verify = app.add_subcommand("verify", "check a map file");
    std::string v_path;
    verify->add_option("file", v_path, "uso-map v1 file")->required();

    // period
    auto* period = app.add_subcommand("period", "orbit period of a vertex under the outmap");
    std::string p_path, p_start = "0";
    period->add_option("file", p_path, "uso-map v1 file")->required();
    period->add_option("--start", p_start, "start vertex (mask or {..})");

    // solve
    auto* solve = app.add_subcommand("solve", "locate the global sink");
    std::string s_path;
    SolveOpts s_opts;
    solve->add_option("file", s_path, "uso-map v1 file")->required();
    solve->add_option("--method", s_opts.method, "scan|period|qpf|facet|random-edge")
        ->required();
    solve->add_option("--seed", s_opts.seed, "seed for seeded methods");
    solve->add_option("--t", s_opts.t, "counting register width (0 = 2n+1)");
    solve->add_option("--samples", s_opts.samples, "qpf sample budget per attempt");
    solve->add_option("--attempts", s_opts.attempts, "qpf recovery attempts");
    solve->add_option("--oracle", s_opts.oracle, "facet decision oracle: brute|period");
    solve->add_option("--start", s_opts.start, "random-edge start vertex");

    // enum
    auto* enum_cmd = app.add_subcommand("enum", "count all USOs of dimension n");
    int e_n = 1;
    enum_cmd->add_option("--n", e_n, "dimension (max " + std::to_string(uso::kMaxEnumDim) + ")")
        ->required();

    // bench
    auto* bench = app.add_subcommand("bench", "query-count table across methods");
    std::string b_family, b_range = "1..8", b_methods = "scan,period", b_a = "0", b_csv;
    int b_seeds = 1, b_t = 0, b_samples = 20;
    bench->add_option("--family", b_family, "psi|uniform|random")->required();
    bench->add_option("--n-range", b_range, "dimension range, e.g. 1..12");
    bench->add_option("--methods", b_methods,
                      "comma list of scan|period|naive-walk|qpf|facet|random-edge");
    bench->add_option("--seeds", b_seeds, "seeds 0..k-1 per dimension");
    bench->add_option("--a", b_a, "sink vertex for the uniform family");
    bench->add_option("--t", b_t, "counting register width (0 = 2n+1)");
    bench->add_option("--samples", b_samples, "qpf sample budget");
    bench->add_option("--csv", b_csv, "output path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        Report report(as_json);
        if (gen->parsed()) {
            return cmd_gen(g_family, g_n, g_a, g_seed, g_seed_opt->count() > 0, g_lower,
                           g_upper, g_dir, g_out, report);
        }
        if (verify->parsed()) return cmd_verify(v_path, report);
        if (period->parsed()) return cmd_period(p_path, p_start, report);
        if (solve->parsed()) return cmd_solve(s_path, s_opts, report);
        if (enum_cmd->parsed()) return cmd_enum(e_n, report);
        if (bench->parsed()) {
            return cmd_bench(b_family, b_range, b_methods, b_seeds, b_a, b_t, b_samples,
                             b_csv);
        }
        return 1;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const uso::QpfExhaustedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const uso::NotUsoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const uso::NotBijectiveError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
