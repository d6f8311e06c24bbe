#include "anisoheat/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace anisoheat {

namespace {

std::mutex plan_mutex;  // FFTW planning is not thread safe

/// parity (-1)^{sum_i k_i} of the FFT-layout multi-index; M even makes the
/// unsigned index equivalent to the signed frequency index mod 2
int index_parity(const Grid& g, std::size_t flat) {
    int s = 0;
    for (int a = g.dim() - 1; a >= 0; --a) {
        const int c = g.count(a);
        s += static_cast<int>(flat % static_cast<std::size_t>(c));
        flat /= static_cast<std::size_t>(c);
    }
    return (s & 1) ? -1 : 1;
}

std::vector<std::complex<double>> run_fftw(const Grid& g, std::vector<std::complex<double>> in,
                                           int sign) {
    std::vector<std::complex<double>> out(in.size());
    std::vector<int> dims(static_cast<std::size_t>(g.dim()));
    for (int a = 0; a < g.dim(); ++a) dims[static_cast<std::size_t>(a)] = g.count(a);
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(plan_mutex);
        plan = fftw_plan_dft(g.dim(), dims.data(), reinterpret_cast<fftw_complex*>(in.data()),
                             reinterpret_cast<fftw_complex*>(out.data()), sign, FFTW_ESTIMATE);
    }
    if (!plan) throw std::runtime_error("fftw plan creation failed");
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(plan_mutex);
        fftw_destroy_plan(plan);
    }
    return out;
}

}  // namespace

double dual_frequency(const Grid& g, int axis, int k_index) {
    const int c = g.count(axis);
    const int k = (k_index < c / 2) ? k_index : k_index - c;
    return k * std::numbers::pi / g.extent(axis);
}

std::vector<std::complex<double>> fourier_forward(const Grid& g, std::span<const double> values) {
    if (values.size() != g.size()) throw std::invalid_argument("fourier_forward: size mismatch");
    std::vector<std::complex<double>> in(values.begin(), values.end());
    auto out = run_fftw(g, std::move(in), FFTW_FORWARD);
    const double hprod = g.cell_volume();
    for (std::size_t i = 0; i < out.size(); ++i) out[i] *= hprod * index_parity(g, i);
    return out;
}

std::vector<std::complex<double>> fourier_inverse(const Grid& g,
                                                  std::span<const std::complex<double>> spectrum) {
    if (spectrum.size() != g.size()) throw std::invalid_argument("fourier_inverse: size mismatch");
    std::vector<std::complex<double>> in(spectrum.size());
    for (std::size_t i = 0; i < in.size(); ++i)
        in[i] = spectrum[i] * static_cast<double>(index_parity(g, i));
    auto out = run_fftw(g, std::move(in), FFTW_BACKWARD);
    double box = 1.0;
    for (int a = 0; a < g.dim(); ++a) box *= 2.0 * g.extent(a);
    for (auto& v : out) v /= box;
    return out;
}

GridFunction fourier_inverse_real(const Grid& g, std::span<const std::complex<double>> spectrum,
                                  double imag_tol) {
    auto c = fourier_inverse(g, spectrum);
    double max_re = 0.0, max_im = 0.0;
    for (const auto& v : c) {
        max_re = std::max(max_re, std::abs(v.real()));
        max_im = std::max(max_im, std::abs(v.imag()));
    }
    if (max_im > imag_tol * std::max(1.0, max_re))
        throw std::runtime_error("fourier_inverse_real: imaginary residue " + std::to_string(max_im) +
                                 " exceeds tolerance (grid too coarse for the symbol)");
    std::vector<double> re(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) re[i] = c[i].real();
    return GridFunction(g, std::move(re));
}

}  // namespace anisoheat
