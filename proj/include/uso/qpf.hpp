#pragma once

// Quantum period finding over the outmap permutation, simulated exactly.
//
// The orbit of the empty set under s has some length l; a counting
// register of t qubits Fourier-transformed over the orbit evaluation
// produces the standard order-finding measurement distribution.  Measured
// outcomes j concentrate near multiples of 2^t / l, and continued-fraction
// expansion of j / 2^t recovers l.  The global sink of a USO is then
// s^(l-1)(0).
//
// Two simulation routes are provided.  The analytic route evaluates the
// closed-form distribution; the statevector route materializes the joint
// state of both registers, applies the transform, and measures.  They
// agree to floating-point accuracy and are tested against each other.

#include <cstdint>
#include <optional>
#include <vector>

#include "uso/cube.hpp"
#include "uso/outmap.hpp"

namespace uso {

enum class QpfMode { analytic, statevector };

// Statevector mode stores 2^(t+n) amplitudes.
inline constexpr int kMaxStatevectorQubits = 26;
// Analytic sampling materializes 2^t probabilities unless l divides 2^t.
inline constexpr int kMaxMaterializeT = 24;

struct QpfConfig {
    int t = 0;                  // counting-register width; 0 selects 2n+1
    int samples = 20;           // measurement budget per recovery attempt
    std::uint64_t seed = 0;
    QpfMode mode = QpfMode::analytic;
};

struct QpfResult {
    std::vector<std::uint64_t> measured;     // outcomes in the order drawn
    std::vector<std::uint64_t> candidates;   // accumulated, ascending
    std::optional<std::uint64_t> recovered_period;
    int queries_used = 0;                    // orbit-evaluation invocations (one per sample)
    int validation_calls = 0;                // power(r, 0) == 0 checks
};

class QpfExhaustedError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Exact measurement distribution over j in [0, 2^t) for orbit length l.
// The second register splits the superposition into l branches; branch
// residues k0 < 2^t mod l hold m = floor(2^t / l) + 1 counting values and
// the rest hold m = floor(2^t / l).  The returned vector is the marginal
//   Pr(j) = sum_residues |S(m(k0), j)|^2 / 4^t,
//   |S(m, j)|^2 = sin^2(pi m l j / 2^t) / sin^2(pi l j / 2^t),
// with the removable singularity m^2 at l*j = 0 mod 2^t.
std::vector<double> qpf_distribution(std::uint64_t l, int t);

// Same distribution computed the long way for an explicit outmap: joint
// statevector of t counting qubits and n workspace qubits, orbit
// evaluation per basis state, Fourier transform, marginal over register 1.
std::vector<double> qpf_statevector_distribution(const Outmap& m, int t);

// cfg.samples measurement outcomes for the orbit of 0 under m, in either
// mode.  Deterministic in cfg.seed.
std::vector<std::uint64_t> qpf_sample(const Outmap& m, const QpfConfig& cfg);

// Denominators of the continued-fraction convergents of j / 2^t that do
// not exceed `bound`, deduplicated, ascending.
std::vector<std::uint64_t> continued_fraction_candidates(std::uint64_t j, int t,
                                                         std::uint64_t bound);

// Shor-style recovery loop: draw samples one at a time, expand each into
// convergent denominators, close the candidate set under pairwise lcm
// (capped at 2^n), and accept the smallest r with s^r(0) = 0, minimized
// over divisors.  recovered_period is empty when the budget is exhausted.
QpfResult recover_period(const Outmap& m, const QpfConfig& cfg);

struct SinkSearch {
    Mask sink;
    QpfResult last;             // the successful attempt
    int attempts;
    int total_queries;          // orbit evaluations across attempts, incl. the sink power
    int total_validation_calls;
};

// Runs recover_period up to max_attempts times (reseeding each retry) and
// returns s^(l-1)(0).  Throws QpfExhaustedError when every attempt fails.
SinkSearch quantum_find_sink(const Outmap& m, const QpfConfig& cfg, int max_attempts = 5);

}  // namespace uso
