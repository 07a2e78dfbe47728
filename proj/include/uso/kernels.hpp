#pragma once

// Data-parallel inner loops behind the table and distribution operations.
//
// Every kernel has a scalar reference implementation; on x86-64 an AVX2
// variant is compiled alongside and selected at runtime when the CPU
// supports it.  Set USO_KERNELS=scalar in the environment to force the
// reference path.  The variants are equivalence-tested against each other.

#include <cstddef>
#include <cstdint>

namespace uso::kernels {

struct ZeroScan {
    std::size_t count;  // entries with (table[i] & select) == 0
    std::size_t first;  // index of the first such entry, or n if none
};

struct Ops {
    const char* name;

    // out[i] = in[i] ^ constant, i in [0, n)
    void (*xor_table)(const std::uint32_t* in, std::uint32_t* out, std::size_t n,
                      std::uint32_t constant);

    // out[i] = i ^ constant, i in [0, n)
    void (*iota_xor)(std::uint32_t* out, std::size_t n, std::uint32_t constant);

    // True iff for every direction bit b and every vertex pair (v, v|b)
    // with b not in v, bit b of table[v] ^ table[v|b] is set.
    bool (*orientation_ok)(const std::uint32_t* table, int dim);

    // Count and first index of entries whose selected bits are all zero.
    ZeroScan (*masked_zero_scan)(const std::uint32_t* table, std::size_t n,
                                 std::uint32_t select);

    // Measurement distribution of the order-finding register: out[j] for
    // j in [0, 2^t), orbit length l.  Requires t >= 1 and l <= 2^t.
    void (*qpf_fill)(double* out, int t, std::uint64_t l);
};

const Ops& scalar_ops();

// Returns the AVX2 table, or nullptr when not compiled in or not
// supported by the running CPU.
const Ops* avx2_ops();

// Active implementation after runtime dispatch.
const Ops& active();

}  // namespace uso::kernels
