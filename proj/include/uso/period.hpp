#pragma once

// Orbit arithmetic for the outmap permutation: the period l of the orbit
// of the empty set, cycle-decomposition powering, and the period-based
// sink formula sink = s^(l-1)(0).

#include <cstdint>
#include <vector>

#include "uso/cube.hpp"
#include "uso/outmap.hpp"

namespace uso {

// Exponents may exceed 64 bits; they are reduced modulo the cycle length.
using U128 = unsigned __int128;

class NotBijectiveError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct PeriodResult {
    Mask start;
    std::vector<Mask> orbit;      // start, s(start), ..., s^(l-1)(start)
    std::uint64_t period;         // orbit.size()
    Mask sink_candidate;          // orbit.back(), the sink when start = 0 on a USO
};

// Iterates s from start until the orbit closes.  Throws NotBijectiveError
// when the walk re-enters a visited vertex other than start (a rho shape,
// impossible for a permutation).
PeriodResult orbit_period(const Outmap& m, Mask start = 0);

// Cycle decomposition of a bijective outmap; supports O(1) powering after
// an O(2^n) precomputation.
class CycleDecomposition {
  public:
    // Throws NotBijectiveError when the table has repeated values.
    explicit CycleDecomposition(const Outmap& m);

    int dim() const { return n_; }
    const std::vector<std::vector<Mask>>& cycles() const { return cycles_; }
    std::uint64_t cycle_length_of(Mask v) const;

    // s^k(v), with k reduced modulo the length of v's cycle.
    Mask power(U128 k, Mask v) const;

  private:
    int n_;
    std::vector<std::vector<Mask>> cycles_;
    std::vector<std::uint32_t> cycle_id_;   // vertex -> containing cycle
    std::vector<std::uint32_t> position_;   // vertex -> index within cycle
};

// One-shot s^k(v); builds the decomposition internally, so loops should
// hold a CycleDecomposition instead.
Mask power(const Outmap& m, U128 k, Mask v);

// global sink of a USO as s^(l-1)(0) where l is the period of the
// 0-orbit.  Requires a USO (unchecked).
Mask sink_via_period(const Outmap& m);

// Number of outmap evaluations a naive sink walk from 0 performs when it
// steps v <- s(v) until s(v) = 0, counting the final evaluation: equals
// the period of the 0-orbit.  Requires a USO (unchecked).
std::uint64_t naive_walk_count(const Outmap& m);

}  // namespace uso
