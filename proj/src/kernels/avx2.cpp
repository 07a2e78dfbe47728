// AVX2 variants.  This translation unit is compiled with -mavx2 -mfma and
// only on x86-64; dispatch.cpp checks CPU support before handing it out.

#include <cstdint>

#include "uso/kernels.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

#include <bit>
#include <cmath>

namespace uso::kernels {
namespace {

void xor_table_avx2(const std::uint32_t* in, std::uint32_t* out, std::size_t n,
                    std::uint32_t constant) {
    const __m256i c = _mm256_set1_epi32(static_cast<int>(constant));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_xor_si256(v, c));
    }
    for (; i < n; ++i) out[i] = in[i] ^ constant;
}

void iota_xor_avx2(std::uint32_t* out, std::size_t n, std::uint32_t constant) {
    const __m256i c = _mm256_set1_epi32(static_cast<int>(constant));
    const __m256i step = _mm256_set1_epi32(8);
    __m256i idx = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_xor_si256(idx, c));
        idx = _mm256_add_epi32(idx, step);
    }
    for (; i < n; ++i) out[i] = static_cast<std::uint32_t>(i) ^ constant;
}

bool orientation_ok_avx2(const std::uint32_t* table, int dim) {
    if (dim < 3) return scalar_ops().orientation_ok(table, dim);
    const std::size_t n = std::size_t{1} << dim;
    const __m256i zero = _mm256_setzero_si256();

    // Directions 1..3: the partner vertex sits inside the same 8-lane
    // block, so xor against a lane permutation of the block itself.
    const __m256i perm[3] = {
        _mm256_setr_epi32(1, 0, 3, 2, 5, 4, 7, 6),
        _mm256_setr_epi32(2, 3, 0, 1, 6, 7, 4, 5),
        _mm256_setr_epi32(4, 5, 6, 7, 0, 1, 2, 3),
    };
    for (int b = 0; b < 3; ++b) {
        const __m256i bitv = _mm256_set1_epi32(1 << b);
        for (std::size_t v = 0; v < n; v += 8) {
            __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(table + v));
            __m256i y = _mm256_permutevar8x32_epi32(x, perm[b]);
            __m256i d = _mm256_and_si256(_mm256_xor_si256(x, y), bitv);
            if (_mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(d, zero)))) {
                return false;
            }
        }
    }

    // Directions 4..dim: partners are a whole block away; pair the lower
    // and upper halves of each 2*bit-sized window.
    for (int b = 3; b < dim; ++b) {
        const std::size_t bit = std::size_t{1} << b;
        const __m256i bitv = _mm256_set1_epi32(static_cast<int>(bit));
        for (std::size_t base = 0; base < n; base += 2 * bit) {
            for (std::size_t off = 0; off < bit; off += 8) {
                __m256i lo = _mm256_loadu_si256(
                    reinterpret_cast<const __m256i*>(table + base + off));
                __m256i hi = _mm256_loadu_si256(
                    reinterpret_cast<const __m256i*>(table + base + bit + off));
                __m256i d = _mm256_and_si256(_mm256_xor_si256(lo, hi), bitv);
                if (_mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(d, zero)))) {
                    return false;
                }
            }
        }
    }
    return true;
}

ZeroScan masked_zero_scan_avx2(const std::uint32_t* table, std::size_t n,
                               std::uint32_t select) {
    ZeroScan r{0, n};
    const __m256i sel = _mm256_set1_epi32(static_cast<int>(select));
    const __m256i zero = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(table + i));
        int hits = _mm256_movemask_ps(
            _mm256_castsi256_ps(_mm256_cmpeq_epi32(_mm256_and_si256(v, sel), zero)));
        if (hits) {
            if (r.count == 0) r.first = i + static_cast<std::size_t>(std::countr_zero(
                                            static_cast<unsigned>(hits)));
            r.count += static_cast<std::size_t>(std::popcount(static_cast<unsigned>(hits)));
        }
    }
    for (; i < n; ++i) {
        if ((table[i] & select) == 0) {
            if (r.count == 0) r.first = i;
            ++r.count;
        }
    }
    return r;
}

// Minimax-free Taylor coefficients, accurate to ~1e-21 on the reduced
// ranges: sin(pi y) = y * P(y^2) for y in [0, 1/4] and
// cos(pi z) = Q(z^2) for z in [0, 1/4].
constexpr double kSinC[10] = {
    3.1415926535897932385,     -5.1677127800499700292,    2.5501640398773454439,
    -0.59926452932079207689,   0.082145886611128228799,  -0.0073704309457143507773,
    0.00046630280576761256442, -0.000021915353447830215827,
    7.9520540014755127848e-7,  -2.294842899726987311e-8,
};
constexpr double kCosC[10] = {
    1.0,                       -4.9348022005446793094,    4.0587121264167682182,
    -1.3352627688545894959,    0.23533063035889320454,   -0.025806891390014060013,
    0.0019295743094039230479,  -0.00010463810492484570712,
    4.3030695870329470073e-6,  -1.3878952462213772114e-7,
};

inline __m256d horner10(const double* c, __m256d x) {
    __m256d acc = _mm256_set1_pd(c[9]);
    for (int k = 8; k >= 0; --k) {
        acc = _mm256_fmadd_pd(acc, x, _mm256_set1_pd(c[k]));
    }
    return acc;
}

// Exact 0 <= num < 2^52 in each 64-bit lane -> double.
inline __m256d u64_small_to_pd(__m256i v) {
    const __m256d magic = _mm256_set1_pd(0x1.0p52);
    __m256d d = _mm256_castsi256_pd(_mm256_or_si256(v, _mm256_castpd_si256(magic)));
    return _mm256_sub_pd(d, magic);
}

// sin^2(pi * num / 2^t) per lane; num holds integers in [0, 2^(t+1)).
inline __m256d sin2_pi_frac_avx2(__m256i num, int t, __m256d scale) {
    const __m256i period = _mm256_set1_epi64x(std::int64_t{1} << t);
    const __m256i pmask = _mm256_set1_epi64x((std::int64_t{1} << t) - 1);
    const __m256i half = _mm256_set1_epi64x(std::int64_t{1} << (t - 1));

    __m256i y = _mm256_and_si256(num, pmask);
    __m256i folded = _mm256_sub_epi64(period, y);
    __m256i gt = _mm256_cmpgt_epi64(y, half);
    y = _mm256_blendv_epi8(y, folded, gt);

    __m256d yf = _mm256_mul_pd(u64_small_to_pd(y), scale);  // in [0, 1/2]
    __m256d z = _mm256_sub_pd(_mm256_set1_pd(0.5), yf);

    __m256d ps = _mm256_mul_pd(yf, horner10(kSinC, _mm256_mul_pd(yf, yf)));
    __m256d pc = horner10(kCosC, _mm256_mul_pd(z, z));
    __m256d use_sin = _mm256_cmp_pd(yf, _mm256_set1_pd(0.25), _CMP_LE_OQ);
    __m256d s = _mm256_blendv_pd(pc, ps, use_sin);
    return _mm256_mul_pd(s, s);
}

void qpf_fill_avx2(double* out, int t, std::uint64_t l) {
    const std::uint64_t big = std::uint64_t{1} << t;
    if (big < 4) {
        scalar_ops().qpf_fill(out, t, l);
        return;
    }
    const std::uint64_t q = big / l;
    const std::uint64_t rem = big % l;
    const std::uint64_t m_hi = q + 1;
    const std::uint64_t m_lo = q;
    const double inv4t = std::ldexp(1.0, -2 * t);
    const __m256d w_hi = _mm256_set1_pd(static_cast<double>(rem) * inv4t);
    const __m256d w_lo = _mm256_set1_pd(static_cast<double>(l - rem) * inv4t);
    const __m256d peak =
        _mm256_set1_pd(static_cast<double>(rem) * inv4t * static_cast<double>(m_hi) *
                           static_cast<double>(m_hi) +
                       static_cast<double>(l - rem) * inv4t * static_cast<double>(m_lo) *
                           static_cast<double>(m_lo));

    const __m256i mod_mask = _mm256_set1_epi64x((std::int64_t{1} << (t + 1)) - 1);
    const __m256i pmask = _mm256_set1_epi64x((std::int64_t{1} << t) - 1);
    const __m256i zero = _mm256_setzero_si256();
    const __m256i lv = _mm256_set1_epi64x(static_cast<std::int64_t>(l));
    const __m256i mhv = _mm256_set1_epi64x(static_cast<std::int64_t>(m_hi));
    const __m256i mlv = _mm256_set1_epi64x(static_cast<std::int64_t>(m_lo));
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d scale = _mm256_set1_pd(std::ldexp(1.0, -t));
    const __m256i step = _mm256_set1_epi64x(4);
    __m256i j = _mm256_setr_epi64x(0, 1, 2, 3);

    // All products stay well under 2^52: j*l < 2^45 and s*m < 2^50 for the
    // supported t <= 24, so _mm256_mul_epu32 and the mantissa conversion
    // are exact.
    for (std::uint64_t base = 0; base < big; base += 4) {
        __m256i s = _mm256_and_si256(_mm256_mul_epu32(j, lv), mod_mask);
        __m256i sing = _mm256_cmpeq_epi64(_mm256_and_si256(s, pmask), zero);
        __m256d singd = _mm256_castsi256_pd(sing);

        __m256d den = sin2_pi_frac_avx2(s, t, scale);
        __m256d nhi = sin2_pi_frac_avx2(_mm256_and_si256(_mm256_mul_epu32(s, mhv), mod_mask),
                                        t, scale);
        __m256d nlo = sin2_pi_frac_avx2(_mm256_and_si256(_mm256_mul_epu32(s, mlv), mod_mask),
                                        t, scale);

        __m256d num = _mm256_fmadd_pd(w_hi, nhi, _mm256_mul_pd(w_lo, nlo));
        __m256d val = _mm256_div_pd(num, _mm256_blendv_pd(den, one, singd));
        val = _mm256_blendv_pd(val, peak, singd);
        _mm256_storeu_pd(out + base, val);
        j = _mm256_add_epi64(j, step);
    }
}

constexpr Ops kAvx2Ops{
    "avx2",      xor_table_avx2,        iota_xor_avx2,
    orientation_ok_avx2, masked_zero_scan_avx2, qpf_fill_avx2,
};

}  // namespace

const Ops* avx2_ops_compiled() { return &kAvx2Ops; }

}  // namespace uso::kernels

#else

namespace uso::kernels {
const Ops* avx2_ops_compiled() { return nullptr; }
}  // namespace uso::kernels

#endif
