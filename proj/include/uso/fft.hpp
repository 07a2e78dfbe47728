#pragma once

// Radix-2 Fourier transform in the quantum convention:
//   F[j] = (1/sqrt(N)) * sum_k a[k] * exp(+2*pi*i*j*k/N)
// with N a power of two.  `inverse` flips the sign of the exponent.

#include <complex>
#include <vector>

namespace uso {

void fourier_transform(std::vector<std::complex<double>>& a, bool inverse = false);

}  // namespace uso
