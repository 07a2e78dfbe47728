#pragma once

// Classical sink-finding strategies and query accounting, for comparison
// against the period-based route.

#include <cstdint>
#include <functional>

#include "uso/cube.hpp"
#include "uso/outmap.hpp"

namespace uso {

// Wraps an outmap so every eval is counted.
class CountingOutmap {
  public:
    explicit CountingOutmap(const Outmap& m) : m_(&m) {}

    int dim() const { return m_->dim(); }

    Mask eval(Mask v) const {
        ++count_;
        return m_->eval(v);
    }

    std::uint64_t queries() const { return count_; }
    void reset() { count_ = 0; }

  private:
    const Outmap* m_;
    mutable std::uint64_t count_ = 0;
};

// Answers "does the subcube contain the global sink?".
using DecisionOracle = std::function<bool(const Subcube&)>;

// Decision oracle backed by a sink scan of the table.  The outmap must
// outlive the returned callable.
DecisionOracle brute_force_decision(const Outmap& m);

// Decision oracle that locates the sink once via the orbit period and then
// answers membership queries for free.
DecisionOracle period_decision(const Outmap& m);

class InconsistentOracleError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct FacetSearchResult {
    Mask sink;
    int decision_calls;  // exactly dim(m)
};

// Locates the sink coordinate by coordinate: for each direction, ask once
// whether the current lower facet contains the sink and keep the facet
// that does.  Exactly n decision queries; a final outmap read confirms the
// narrowed vertex is the sink and raises InconsistentOracleError when the
// oracle's answers contradicted each other.
FacetSearchResult solve_by_facet_decision(const Outmap& m, const DecisionOracle& decision);

class WalkCapExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct WalkResult {
    Mask sink;
    std::uint64_t queries;  // outmap evaluations, including the final sink check
    std::uint64_t steps;    // edges traversed
};

// Follows a uniformly random outgoing edge until the sink is reached.
// Terminates on every finite orientation run long enough; the step cap
// 4^n turns a cycling non-USO input into WalkCapExceeded instead.
WalkResult random_edge_walk(const Outmap& m, Mask start, std::uint64_t seed);

}  // namespace uso
