// Acceptance gate: one check per criterion, one PASS/FAIL line each.
// Criteria 1 and 9 drive the installed CLI binary; the rest call the
// library directly.  Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "fixtures.hpp"
#include "uso/period.hpp"
#include "uso/qpf.hpp"
#include "uso/solvers.hpp"
#include "uso/verify.hpp"

using namespace uso;

namespace {

int failures = 0;

void report(int index, const std::string& label, bool ok, const std::string& detail) {
    std::cout << "[" << index << "] " << label << ": " << (ok ? "PASS" : "FAIL");
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++failures;
}

// 1. cmd_period on psi(n) reports 2^n for n = 1..16 in under 10 seconds.
void criterion1() {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 16 && ok; ++n) {
        const std::string path =
            (cli::scratch_dir() / ("acc1_psi" + std::to_string(n) + ".uso")).string();
        if (cli::run("gen --family psi --n " + std::to_string(n) + " --out " + path)
                .exit_code != 0) {
            ok = false;
            detail = "gen failed at n=" + std::to_string(n);
            break;
        }
        const cli::RunResult r = cli::run("period " + path);
        const std::string want = std::to_string(std::uint64_t{1} << n);
        if (r.exit_code != 0 || cli::report_value(r.out, "period") != want) {
            ok = false;
            detail = "period mismatch at n=" + std::to_string(n);
        }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && secs >= 10.0) {
        ok = false;
        detail = "too slow";
    }
    if (ok) {
        std::ostringstream ss;
        ss << "n=1..16 exact, " << std::fixed << secs << "s";
        detail = ss.str();
    }
    report(1, "exponential-period family via cli", ok, detail);
}

// 2. is_uso(flip(m, lambda)) for all 744 3-cube USOs and all 8 flip sets.
void criterion2() {
    int checks = 0;
    bool ok = true;
    for (const Outmap& m : enumerate_usos(3)) {
        for (Mask lambda = 0; lambda < 8; ++lambda) {
            ++checks;
            if (!is_uso(flip(m, lambda))) ok = false;
        }
    }
    ok = ok && checks == 5952;
    report(2, "flip closure over all 3-cube USOs", ok, std::to_string(checks) + " checks");
}

// 3. Outmaps of USOs are bijections: all 744 n=3 USOs plus 100 seeds of
// the flip-product family for each n <= 10.
void criterion3() {
    bool ok = true;
    int checks = 0;
    for (const Outmap& m : enumerate_usos(3)) {
        ++checks;
        if (!is_bijection(m)) ok = false;
    }
    for (int n = 1; n <= 10; ++n) {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            ++checks;
            if (!is_bijection(random_uso(n, seed))) ok = false;
        }
    }
    report(3, "outmap bijectivity", ok, std::to_string(checks) + " maps");
}

// 4. Enumeration counts 2 / 12 / 744 from the definitional verifier.
void criterion4() {
    const std::size_t c1 = enumerate_usos(1).size();
    const std::size_t c2 = enumerate_usos(2).size();
    const std::size_t c3 = enumerate_usos(3).size();
    const bool ok = c1 == 2 && c2 == 12 && c3 == 744;
    report(4, "enumeration regression", ok,
           std::to_string(c1) + "/" + std::to_string(c2) + "/" + std::to_string(c3));
}

// 5. sink_via_period == global_sink across families.
void criterion5() {
    bool ok = true;
    int checks = 0;
    const auto check = [&](const Outmap& m) {
        ++checks;
        if (sink_via_period(m) != global_sink(m)) ok = false;
    };
    for (const Outmap& m : enumerate_usos(3)) check(m);
    for (int n = 1; n <= 10; ++n) {
        check(psi(n));
        for (Mask a = 0; a < (Mask{1} << n); ++a) check(uniform(n, a));
        for (std::uint64_t seed = 0; seed < 100; ++seed) check(random_uso(n, seed));
    }
    report(5, "period-sink theorem", ok, std::to_string(checks) + " maps");
}

// 6. Reference 3-cube instance ground truth.
void criterion6() {
    const Outmap m = fixtures::reference3();
    const bool ok = is_uso(m) && global_sink(m) == 5 && m.eval(0) == 7 &&
                    orbit_period(m, 0).period == 4;
    report(6, "reference 3-cube ground truth", ok, "sink {1,3}, source {}, period 4");
}

// 7. Distribution exactness: combs for dividing periods; analytic vs
// statevector within total variation 1e-9 (all USOs n <= 3, plus a
// generated n=4 battery, at t = 10).
void criterion7() {
    bool ok = true;
    std::string detail;
    for (const std::uint64_t l : {1, 2, 4, 8, 16}) {
        for (const int t : {6, 10, 14}) {
            const std::vector<double> d = qpf_distribution(l, t);
            const std::uint64_t stride = (std::uint64_t{1} << t) / l;
            for (std::uint64_t j = 0; j < d.size(); ++j) {
                const double want = j % stride == 0 ? 1.0 / static_cast<double>(l) : 0.0;
                if (std::abs(d[j] - want) > 1e-12) ok = false;
            }
        }
    }
    if (!ok) detail = "comb deviation";

    double worst_tv = 0.0;
    int maps = 0;
    const auto compare = [&](const Outmap& m, int t) {
        ++maps;
        const std::vector<double> sv = qpf_statevector_distribution(m, t);
        const std::vector<double> an = qpf_distribution(orbit_period(m, 0).period, t);
        double tv = 0.0;
        for (std::size_t j = 0; j < sv.size(); ++j) tv += std::abs(sv[j] - an[j]);
        worst_tv = std::max(worst_tv, tv / 2.0);
    };
    for (int n = 1; n <= 3; ++n) {
        for (const Outmap& m : enumerate_usos(n)) {
            for (const int t : {4, 7, 10}) compare(m, t);
        }
    }
    compare(psi(4), 10);
    for (Mask a = 0; a < 16; ++a) compare(uniform(4, a), 10);
    for (std::uint64_t seed = 0; seed < 20; ++seed) compare(random_uso(4, seed), 10);
    if (worst_tv >= 1e-9) {
        ok = false;
        detail = "tv too large";
    }
    if (ok) {
        std::ostringstream ss;
        ss << maps << " maps, worst tv " << std::scientific << worst_tv;
        detail = ss.str();
    }
    report(7, "qpf distribution exactness", ok, detail);
}

// 8. End-to-end sink finding: >= 99% over 1000 seeded random 6-cube
// trials at t = 13, and 100% for psi(n), n <= 12, at t = 2n+1; sample
// budget 20, single attempt, validation-based recovery.
void criterion8() {
    int successes = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const Outmap m = random_uso(6, seed);
        QpfConfig cfg;
        cfg.t = 13;
        cfg.samples = 20;
        cfg.seed = seed;
        try {
            if (quantum_find_sink(m, cfg, 1).sink == global_sink(m)) ++successes;
        } catch (const QpfExhaustedError&) {
        }
    }
    bool psi_ok = true;
    for (int n = 1; n <= 12; ++n) {
        const Outmap m = psi(n);
        QpfConfig cfg;
        cfg.t = 2 * n + 1;
        cfg.samples = 20;
        try {
            if (quantum_find_sink(m, cfg, 1).sink != sink_via_period(m)) psi_ok = false;
        } catch (const QpfExhaustedError&) {
            psi_ok = false;
        }
    }
    const bool ok = successes >= 990 && psi_ok;
    report(8, "end-to-end quantum sink finding", ok,
           std::to_string(successes) + "/1000 random n=6; psi n<=12 " +
               (psi_ok ? "100%" : "incomplete"));
}

// 9. cmd_bench: naive walk costs exactly 2^n on psi(n), n = 1..14, while
// qpf stays within 21 oracle powers per instance.
void criterion9() {
    const cli::RunResult r = cli::run(
        "bench --family psi --n-range 1..14 --methods naive-walk,qpf --samples 20");
    bool ok = r.exit_code == 0;
    int walk_rows = 0;
    int qpf_rows = 0;
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        std::vector<std::string> row;
        std::string field;
        bool quoted = false;
        for (const char c : line) {
            if (c == '"') {
                quoted = !quoted;
            } else if (c == ',' && !quoted) {
                row.push_back(field);
                field.clear();
            } else {
                field += c;
            }
        }
        row.push_back(field);
        if (row.size() != 11 || row[10] != "ok") {
            ok = false;
            continue;
        }
        const int n = std::stoi(row[1]);
        if (row[3] == "naive-walk") {
            ++walk_rows;
            if (row[6] != std::to_string(std::uint64_t{1} << n)) ok = false;
        } else if (row[3] == "qpf") {
            ++qpf_rows;
            if (std::stoll(row[6]) > 21) ok = false;
        }
    }
    ok = ok && walk_rows == 14 && qpf_rows == 14;
    report(9, "naive-walk exponential cost vs qpf via cli", ok,
           std::to_string(walk_rows) + "+" + std::to_string(qpf_rows) + " rows");
}

// 10. Facet decision search: exactly n calls, matches global_sink on all
// 744 3-cube USOs.
void criterion10() {
    bool ok = true;
    int checks = 0;
    for (const Outmap& m : enumerate_usos(3)) {
        ++checks;
        const FacetSearchResult r = solve_by_facet_decision(m, brute_force_decision(m));
        if (r.sink != global_sink(m) || r.decision_calls != 3) ok = false;
    }
    report(10, "search-to-decision reduction", ok, std::to_string(checks) + " maps");
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    std::cout << "SUMMARY: " << (10 - failures) << "/10 PASS\n";
    return failures;
}
