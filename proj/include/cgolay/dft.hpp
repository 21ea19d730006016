#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace cgolay {

/// Evaluates sum_k x_k * exp(+2*pi*i*j*k/N) for j = 0..N-1, where x is
/// zero-padded to N. With x the coefficients of a polynomial h, entry j is
/// h(e^{2 pi i j / N}).
///
/// Backed by FFTW. Plans are built once per (thread, N); execution is
/// reentrant across threads.
std::vector<std::complex<double>> polynomial_dft(std::span<const std::complex<double>> coeffs,
                                                 std::size_t samples);

}  // namespace cgolay
