#include "uso/period.hpp"

namespace uso {

PeriodResult orbit_period(const Outmap& m, Mask start) {
    if (start >= m.size()) throw std::out_of_range("start vertex outside cube");
    PeriodResult r;
    r.start = start;
    std::vector<bool> visited(m.size(), false);
    Mask v = start;
    while (!visited[v]) {
        visited[v] = true;
        r.orbit.push_back(v);
        v = m.eval(v);
    }
    if (v != start) {
        throw NotBijectiveError("orbit walk re-entered at a non-start vertex");
    }
    r.period = r.orbit.size();
    r.sink_candidate = r.orbit.back();
    return r;
}

CycleDecomposition::CycleDecomposition(const Outmap& m)
    : n_(m.dim()),
      cycle_id_(m.size(), 0),
      position_(m.size(), 0) {
    std::vector<bool> seen(m.size(), false);
    for (Mask v : m.table()) {
        if (seen[v]) throw NotBijectiveError("outmap table has repeated values");
        seen[v] = true;
    }
    std::vector<bool> placed(m.size(), false);
    for (Mask v = 0; v < m.size(); ++v) {
        if (placed[v]) continue;
        std::vector<Mask> cycle;
        Mask w = v;
        do {
            placed[w] = true;
            cycle_id_[w] = static_cast<std::uint32_t>(cycles_.size());
            position_[w] = static_cast<std::uint32_t>(cycle.size());
            cycle.push_back(w);
            w = m.table()[w];
        } while (w != v);
        cycles_.push_back(std::move(cycle));
    }
}

std::uint64_t CycleDecomposition::cycle_length_of(Mask v) const {
    if (v >= cycle_id_.size()) throw std::out_of_range("vertex outside cube");
    return cycles_[cycle_id_[v]].size();
}

Mask CycleDecomposition::power(U128 k, Mask v) const {
    if (v >= cycle_id_.size()) throw std::out_of_range("vertex outside cube");
    const std::vector<Mask>& cycle = cycles_[cycle_id_[v]];
    const std::uint64_t len = cycle.size();
    const std::uint64_t shift = static_cast<std::uint64_t>(k % len);
    std::uint64_t pos = position_[v] + shift;
    if (pos >= len) pos -= len;
    return cycle[pos];
}

Mask power(const Outmap& m, U128 k, Mask v) {
    return CycleDecomposition{m}.power(k, v);
}

Mask sink_via_period(const Outmap& m) {
    const PeriodResult r = orbit_period(m, 0);
    return r.sink_candidate;
}

std::uint64_t naive_walk_count(const Outmap& m) {
    // Walk v <- s(v) from 0, one evaluation per visited vertex, stopping
    // once the evaluation returns 0 again: exactly the orbit length.
    std::uint64_t evals = 0;
    Mask v = 0;
    do {
        v = m.eval(v);
        ++evals;
        if (evals > m.size()) {
            throw NotBijectiveError("walk exceeded the vertex count without closing");
        }
    } while (v != 0);
    return evals;
}

}  // namespace uso
