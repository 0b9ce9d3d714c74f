#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace sdelab::detail {

// Real-to-half-complex transform scaled by 1/n, so that
//   values[i] = sum_k c_k exp(2 pi i k i / n)   (Hermitian completion implied).
std::vector<std::complex<double>> forward_fft(std::span<const double> values);

// Inverse of forward_fft onto n points. `coefficients` may hold fewer than
// n/2+1 entries; missing modes are zero.
std::vector<double> inverse_fft(std::span<const std::complex<double>> coefficients,
                                std::size_t n);

}  // namespace sdelab::detail
