#pragma once

#include <complex>
#include <vector>

namespace harmap::detail {

using cplx = std::complex<double>;

// In place. forward: X_k = sum_j x_j e^{-2 pi i jk/n}; backward uses e^{+...}. No scaling.
void fft(std::vector<cplx>& a, bool forward);

// Coefficients in FFT order (k = 0..n-1, upper half negative) with the 1/n factor applied.
std::vector<cplx> dft_coeffs(const std::vector<cplx>& samples);

// Inverse of dft_coeffs.
std::vector<cplx> dft_synth(const std::vector<cplx>& coeffs);

inline long freq(std::size_t k, std::size_t n) {
    return k < n / 2 ? static_cast<long>(k) : static_cast<long>(k) - static_cast<long>(n);
}

}  // namespace harmap::detail
