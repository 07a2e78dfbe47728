#include "uso/qpf.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "uso/fft.hpp"
#include "uso/kernels.hpp"
#include "uso/period.hpp"
#include "uso/rng.hpp"

namespace uso {
namespace {

int resolve_t(int n, const QpfConfig& cfg) {
    const int t = cfg.t == 0 ? 2 * n + 1 : cfg.t;
    if (t < 1 || t > 40) {
        throw std::invalid_argument("counting register width out of range");
    }
    return t;
}

// Measurement sampler for the counting register.  The analytic route
// draws from the closed-form marginal; when the orbit length divides 2^t
// the distribution is an exact comb over multiples of 2^t / l and is
// sampled without materializing it.  The statevector route prepares the
// joint state once and performs both register measurements per draw.
class Sampler {
  public:
    Sampler(const Outmap& m, const CycleDecomposition& dec, int t, QpfMode mode,
            std::uint64_t seed)
        : n_(m.dim()), t_(t), big_(std::uint64_t{1} << t), mode_(mode), rng_(seed) {
        orbit_ = orbit_period(m, 0).orbit;
        const std::uint64_t l = orbit_.size();
        if (l > big_) {
            throw std::invalid_argument("counting register narrower than the orbit");
        }
        if (mode_ == QpfMode::analytic) {
            if (big_ % l == 0) return;  // comb case
            if (t_ > kMaxMaterializeT) {
                throw std::invalid_argument(
                    "analytic sampling would materialize more than 2^" +
                    std::to_string(kMaxMaterializeT) + " probabilities");
            }
            cdf_.resize(big_);
            kernels::active().qpf_fill(cdf_.data(), t_, l);
            std::partial_sum(cdf_.begin(), cdf_.end(), cdf_.begin());
        } else {
            if (t_ + n_ > kMaxStatevectorQubits) {
                throw std::invalid_argument("statevector would exceed 2^" +
                                            std::to_string(kMaxStatevectorQubits) +
                                            " amplitudes");
            }
            // (1/sqrt(2^t)) sum_k |k>|s^k(0)>, one nonzero amplitude per k.
            joint_.assign(big_ << n_, {0.0, 0.0});
            reg2_prob_.assign(orbit_.size(), 0.0);
            const double amp = 1.0 / std::sqrt(static_cast<double>(big_));
            const double p = 1.0 / static_cast<double>(big_);
            for (std::uint64_t k = 0; k < big_; ++k) {
                const Mask w = dec.power(k, 0);
                joint_[(k << n_) | w] = amp;
                reg2_prob_[k % l] += p;
            }
        }
    }

    std::uint64_t draw() {
        if (mode_ == QpfMode::analytic) {
            const std::uint64_t l = orbit_.size();
            if (cdf_.empty()) return (big_ / l) * rng_.below(l);
            const double u = rng_.unit() * cdf_.back();
            const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
            const std::size_t idx = static_cast<std::size_t>(it - cdf_.begin());
            return std::min<std::uint64_t>(idx, big_ - 1);
        }
        return statevector_draw();
    }

  private:
    std::uint64_t statevector_draw() {
        // Measure register 2, collapsing the counting register to the
        // branch of one orbit vertex.
        double u = rng_.unit();
        std::size_t pick = orbit_.size() - 1;
        for (std::size_t i = 0; i < reg2_prob_.size(); ++i) {
            if (u < reg2_prob_[i]) {
                pick = i;
                break;
            }
            u -= reg2_prob_[i];
        }
        const Mask w = orbit_[pick];
        const double norm = 1.0 / std::sqrt(reg2_prob_[pick]);
        std::vector<std::complex<double>> reg1(big_);
        for (std::uint64_t k = 0; k < big_; ++k) {
            reg1[k] = joint_[(k << n_) | w] * norm;
        }
        fourier_transform(reg1);
        // Measure register 1.
        double total = 0.0;
        for (const std::complex<double>& a : reg1) total += std::norm(a);
        double v = rng_.unit() * total;
        for (std::uint64_t j = 0; j < big_; ++j) {
            const double p = std::norm(reg1[j]);
            if (v < p) return j;
            v -= p;
        }
        return big_ - 1;
    }

    int n_;
    int t_;
    std::uint64_t big_;
    QpfMode mode_;
    Rng rng_;
    std::vector<Mask> orbit_;
    std::vector<double> cdf_;                   // analytic, non-comb
    std::vector<std::complex<double>> joint_;   // statevector
    std::vector<double> reg2_prob_;
};

// Removes prime factors from r while the reduced value still validates;
// the result is the minimal validating divisor, i.e. the exact period.
template <typename Validate>
std::uint64_t minimize_over_divisors(std::uint64_t r, Validate&& validate) {
    std::vector<std::uint64_t> primes;
    std::uint64_t x = r;
    for (std::uint64_t p = 2; p * p <= x; ++p) {
        if (x % p == 0) {
            primes.push_back(p);
            while (x % p == 0) x /= p;
        }
    }
    if (x > 1) primes.push_back(x);
    for (std::uint64_t p : primes) {
        while (r % p == 0 && validate(r / p)) r /= p;
    }
    return r;
}

}  // namespace

std::vector<double> qpf_distribution(std::uint64_t l, int t) {
    if (t < 1 || t > kMaxMaterializeT) {
        throw std::invalid_argument("counting register width out of range");
    }
    if (l < 1 || l > (std::uint64_t{1} << t)) {
        throw std::invalid_argument("orbit length must lie in [1, 2^t]");
    }
    std::vector<double> out(std::size_t{1} << t);
    kernels::active().qpf_fill(out.data(), t, l);
    return out;
}

std::vector<double> qpf_statevector_distribution(const Outmap& m, int t) {
    if (t < 1 || t + m.dim() > kMaxStatevectorQubits) {
        throw std::invalid_argument("statevector would exceed 2^" +
                                    std::to_string(kMaxStatevectorQubits) + " amplitudes");
    }
    const CycleDecomposition dec{m};
    const std::vector<Mask> orbit = orbit_period(m, 0).orbit;
    const std::uint64_t big = std::uint64_t{1} << t;
    if (orbit.size() > big) {
        throw std::invalid_argument("counting register narrower than the orbit");
    }
    const int n = m.dim();
    std::vector<std::complex<double>> joint(big << n, {0.0, 0.0});
    const double amp = 1.0 / std::sqrt(static_cast<double>(big));
    for (std::uint64_t k = 0; k < big; ++k) {
        joint[(k << n) | dec.power(k, 0)] = amp;
    }
    // Marginal of register 1 after QFT x I: per orbit vertex w, transform
    // the (unnormalized) branch and accumulate its weight.
    std::vector<double> out(big, 0.0);
    std::vector<std::complex<double>> branch(big);
    for (const Mask w : orbit) {
        for (std::uint64_t k = 0; k < big; ++k) branch[k] = joint[(k << n) | w];
        fourier_transform(branch);
        for (std::uint64_t j = 0; j < big; ++j) out[j] += std::norm(branch[j]);
    }
    return out;
}

std::vector<std::uint64_t> qpf_sample(const Outmap& m, const QpfConfig& cfg) {
    const int t = resolve_t(m.dim(), cfg);
    if (cfg.samples < 0) throw std::invalid_argument("negative sample count");
    CycleDecomposition dec(m);
    Sampler sampler(m, dec, t, cfg.mode, cfg.seed);
    std::vector<std::uint64_t> out;
    out.reserve(static_cast<std::size_t>(cfg.samples));
    for (int i = 0; i < cfg.samples; ++i) out.push_back(sampler.draw());
    return out;
}

std::vector<std::uint64_t> continued_fraction_candidates(std::uint64_t j, int t,
                                                         std::uint64_t bound) {
    if (t < 1 || t > 62) throw std::invalid_argument("register width out of range");
    if (j >> t != 0) throw std::invalid_argument("outcome outside the register");
    // Convergent denominators q_i = a_i q_{i-1} + q_{i-2} of j / 2^t; they
    // are nondecreasing, so stop at the first one past the bound.
    std::uint64_t x = j;
    std::uint64_t y = std::uint64_t{1} << t;
    std::uint64_t qm1 = 0;  // q_{i-1}
    std::uint64_t qm2 = 1;  // q_{i-2}
    std::vector<std::uint64_t> out;
    while (y != 0) {
        const std::uint64_t a = x / y;
        const std::uint64_t q = a * qm1 + qm2;
        if (q > bound) break;
        if (out.empty() || out.back() != q) out.push_back(q);
        qm2 = qm1;
        qm1 = q;
        const std::uint64_t r = x % y;
        x = y;
        y = r;
    }
    return out;
}

QpfResult recover_period(const Outmap& m, const QpfConfig& cfg) {
    const int t = resolve_t(m.dim(), cfg);
    if (cfg.samples < 1) throw std::invalid_argument("sample budget must be positive");
    const std::uint64_t bound = m.size();
    CycleDecomposition dec(m);
    Sampler sampler(m, dec, t, cfg.mode, cfg.seed);

    QpfResult res;
    std::set<std::uint64_t> candidates;
    std::set<std::uint64_t> rejected;
    const auto validate = [&](std::uint64_t r) {
        ++res.validation_calls;
        return dec.power(r, 0) == 0;
    };

    for (int i = 0; i < cfg.samples; ++i) {
        const std::uint64_t j = sampler.draw();
        ++res.queries_used;
        res.measured.push_back(j);

        // New convergent denominators, then lcm closure against the
        // accumulated set (still capped at 2^n).
        std::vector<std::uint64_t> work;
        for (const std::uint64_t c : continued_fraction_candidates(j, t, bound)) {
            if (candidates.insert(c).second) work.push_back(c);
        }
        while (!work.empty()) {
            const std::uint64_t a = work.back();
            work.pop_back();
            std::vector<std::uint64_t> snapshot(candidates.begin(), candidates.end());
            for (const std::uint64_t b : snapshot) {
                const std::uint64_t l = std::lcm(a, b);
                if (l <= bound && candidates.insert(l).second) work.push_back(l);
            }
        }

        for (const std::uint64_t r : candidates) {
            if (rejected.count(r) != 0) continue;
            if (validate(r)) {
                res.recovered_period = minimize_over_divisors(r, validate);
                res.candidates.assign(candidates.begin(), candidates.end());
                return res;
            }
            rejected.insert(r);
        }
    }
    res.candidates.assign(candidates.begin(), candidates.end());
    return res;
}

SinkSearch quantum_find_sink(const Outmap& m, const QpfConfig& cfg, int max_attempts) {
    if (max_attempts < 1) throw std::invalid_argument("attempt count must be positive");
    CycleDecomposition dec(m);
    SinkSearch out{};
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        QpfConfig c = cfg;
        c.seed = cfg.seed + static_cast<std::uint64_t>(attempt);
        QpfResult r = recover_period(m, c);
        out.total_queries += r.queries_used;
        out.total_validation_calls += r.validation_calls;
        if (r.recovered_period.has_value()) {
            const std::uint64_t l = *r.recovered_period;
            const Mask sink = dec.power(l - 1, 0);
            ++out.total_queries;
            if (m.eval(sink) == 0) {
                out.sink = sink;
                out.last = std::move(r);
                out.attempts = attempt + 1;
                return out;
            }
        }
    }
    throw QpfExhaustedError("period recovery exhausted after " +
                            std::to_string(max_attempts) + " attempts");
}

}  // namespace uso
