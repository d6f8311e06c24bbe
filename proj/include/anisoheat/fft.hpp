#pragma once

#include <complex>
#include <span>
#include <vector>

#include "anisoheat/grid.hpp"

namespace anisoheat {

/// Spectral transforms between grid samples and samples of the continuous
/// Fourier transform f_hat(xi) = integral f(z) e^{-i z.xi} dz on the dual
/// lattice xi_k = k pi / L (k = -M/2 .. M/2-1, stored in FFT wrap order).

/// Signed frequency of FFT-layout index k_index on the given axis.
double dual_frequency(const Grid& g, int axis, int k_index);

/// Forward transform of real samples; returns f_hat(xi_k) in FFT layout.
std::vector<std::complex<double>> fourier_forward(const Grid& g, std::span<const double> values);

/// Inverse transform of a spectrum in FFT layout back to physical samples.
std::vector<std::complex<double>> fourier_inverse(const Grid& g,
                                                  std::span<const std::complex<double>> spectrum);

/// Inverse transform with a guarded real-part extraction: throws
/// std::runtime_error when max |Im| exceeds imag_tol * max(1, max |Re|).
GridFunction fourier_inverse_real(const Grid& g, std::span<const std::complex<double>> spectrum,
                                  double imag_tol = 1e-10);

}  // namespace anisoheat
