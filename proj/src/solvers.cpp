#include "uso/solvers.hpp"

#include "uso/period.hpp"
#include "uso/rng.hpp"
#include "uso/verify.hpp"

namespace uso {

DecisionOracle brute_force_decision(const Outmap& m) {
    return [&m](const Subcube& c) { return decide(m, c); };
}

DecisionOracle period_decision(const Outmap& m) {
    const Mask sink = sink_via_period(m);
    return [sink](const Subcube& c) { return contains(c, sink); };
}

FacetSearchResult solve_by_facet_decision(const Outmap& m, const DecisionOracle& decision) {
    const int n = m.dim();
    Subcube cur = full_cube(n);
    int calls = 0;
    for (int d = 1; d <= n; ++d) {
        const Mask bit = element(d);
        const Subcube lower{cur.lo, cur.hi & ~bit};
        ++calls;
        cur = decision(lower) ? lower : Subcube{cur.lo | bit, cur.hi};
    }
    if (m.eval(cur.lo) != 0) {
        throw InconsistentOracleError("facet answers narrowed to a non-sink vertex");
    }
    return {cur.lo, calls};
}

WalkResult random_edge_walk(const Outmap& m, Mask start, std::uint64_t seed) {
    if (start >= m.size()) throw std::out_of_range("start vertex outside cube");
    const std::uint64_t cap = std::uint64_t{1} << (2 * m.dim());  // 4^n steps
    CountingOutmap counted(m);
    Rng rng(seed);
    Mask v = start;
    std::uint64_t steps = 0;
    while (true) {
        const Mask outs = counted.eval(v);
        if (outs == 0) break;
        if (steps == cap) {
            throw WalkCapExceeded("random edge walk exceeded 4^n steps");
        }
        // Uniform choice among the outgoing directions.
        std::uint64_t pick = rng.below(static_cast<std::uint64_t>(set_size(outs)));
        Mask rest = outs;
        while (pick-- > 0) rest &= rest - 1;
        v ^= rest & (~rest + 1);  // lowest remaining bit
        ++steps;
    }
    return {v, counted.queries(), steps};
}

}  // namespace uso
