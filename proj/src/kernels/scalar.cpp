// Reference implementations.  Every variant must match these exactly for
// the integer kernels and to tight floating-point tolerance for qpf_fill.

#include <cmath>
#include <cstdint>

#include "uso/kernels.hpp"

namespace uso::kernels {
namespace {

void xor_table_scalar(const std::uint32_t* in, std::uint32_t* out, std::size_t n,
                      std::uint32_t constant) {
    for (std::size_t i = 0; i < n; ++i) out[i] = in[i] ^ constant;
}

void iota_xor_scalar(std::uint32_t* out, std::size_t n, std::uint32_t constant) {
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::uint32_t>(i) ^ constant;
}

bool orientation_ok_scalar(const std::uint32_t* table, int dim) {
    const std::size_t n = std::size_t{1} << dim;
    for (int b = 0; b < dim; ++b) {
        const std::uint32_t bit = std::uint32_t{1} << b;
        for (std::size_t v = 0; v < n; ++v) {
            if (v & bit) continue;
            // Edge {v, v+bit} must appear in exactly one endpoint's out-set.
            if (((table[v] ^ table[v | bit]) & bit) == 0) return false;
        }
    }
    return true;
}

ZeroScan masked_zero_scan_scalar(const std::uint32_t* table, std::size_t n,
                                 std::uint32_t select) {
    ZeroScan r{0, n};
    for (std::size_t i = 0; i < n; ++i) {
        if ((table[i] & select) == 0) {
            if (r.count == 0) r.first = i;
            ++r.count;
        }
    }
    return r;
}

// sin^2(pi * num / 2^t) for integer num.  Folding to [0, 1/2] happens on
// exact integers, so the only rounding is in the final sin evaluation;
// naive sin(pi * j * ...) would lose the phase for large arguments.
double sin2_pi_frac(std::uint64_t num, int t) {
    const std::uint64_t period = std::uint64_t{1} << t;  // sin^2 has period pi
    num &= period - 1;
    if (num > period / 2) num = period - num;  // sin(pi(1-y)) = sin(pi y)
    const double y = std::ldexp(static_cast<double>(num), -t);  // in [0, 1/2]
    const double s = std::sin(3.14159265358979323846 * y);
    return s * s;
}

void qpf_fill_scalar(double* out, int t, std::uint64_t l) {
    const std::uint64_t big = std::uint64_t{1} << t;
    const std::uint64_t mod = big << 1;           // phase numerators live mod 2^(t+1)
    const std::uint64_t q = big / l;
    const std::uint64_t rem = big % l;
    const std::uint64_t m_hi = q + 1;
    const std::uint64_t m_lo = q;
    const double inv4t = std::ldexp(1.0, -2 * t);
    const double w_hi = static_cast<double>(rem) * inv4t;
    const double w_lo = static_cast<double>(l - rem) * inv4t;
    const double peak_hi = static_cast<double>(m_hi) * static_cast<double>(m_hi);
    const double peak_lo = static_cast<double>(m_lo) * static_cast<double>(m_lo);

    for (std::uint64_t j = 0; j < big; ++j) {
        const std::uint64_t s = (j * l) & (mod - 1);
        if ((s & (big - 1)) == 0) {
            // j*l = 0 mod 2^t: every term of the geometric sum is 1.
            out[j] = w_hi * peak_hi + w_lo * peak_lo;
            continue;
        }
        const double den = sin2_pi_frac(s, t);
        const double num_hi = sin2_pi_frac((s * m_hi) & (mod - 1), t);
        const double num_lo = sin2_pi_frac((s * m_lo) & (mod - 1), t);
        out[j] = (w_hi * num_hi + w_lo * num_lo) / den;
    }
}

constexpr Ops kScalarOps{
    "scalar",      xor_table_scalar,        iota_xor_scalar,
    orientation_ok_scalar, masked_zero_scan_scalar, qpf_fill_scalar,
};

}  // namespace

const Ops& scalar_ops() { return kScalarOps; }

}  // namespace uso::kernels
