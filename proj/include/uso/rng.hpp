#pragma once

// Deterministic random helpers.  std::mt19937_64 has a standardized output
// sequence, but the std distribution adapters do not, so the bound/unit
// draws are done by hand to keep seeded results identical across toolchains.

#include <cstdint>
#include <random>

namespace uso {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform integer in [0, bound), unbiased via rejection.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x > limit);
        return x % bound;
    }

    // Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    bool coin() { return (eng_() >> 63) != 0; }

  private:
    std::mt19937_64 eng_;
};

}  // namespace uso
