#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "anisoheat/fft.hpp"
#include "anisoheat/kernels.hpp"
#include "anisoheat/norms.hpp"
#include "anisoheat/quadrature.hpp"
#include "oracles.hpp"

using namespace anisoheat;

TEST_CASE("fourier transforms: round trip and exact Gaussian spectrum") {
    Grid g = Grid::cube(2, 10.0, 64);
    auto f = sample(g, [](std::span<const double> z) {
        return std::exp(-0.5 * z[0] * z[0] - z[1] * z[1]) + 0.2 * z[0] * std::exp(-z[0] * z[0] - z[1] * z[1]);
    });
    auto spec = fourier_forward(g, f.values);
    GridFunction back = fourier_inverse_real(g, spec, 1e-10);
    double maxdiff = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i)
        maxdiff = std::max(maxdiff, std::abs(f.values[i] - back.values[i]));
    CHECK(maxdiff < 1e-12);

    // forward transform of exp(-|z|^2/2) is 2 pi exp(-|xi|^2/2) in 2-D
    auto gauss = sample(g, [](std::span<const double> z) {
        return std::exp(-0.5 * (z[0] * z[0] + z[1] * z[1]));
    });
    auto gspec = fourier_forward(g, gauss.values);
    int idx[2];
    for (std::size_t i = 0; i < gspec.size(); i += 97) {
        g.unflatten(i, idx);
        const double xi0 = dual_frequency(g, 0, idx[0]), xi1 = dual_frequency(g, 1, idx[1]);
        const double expect = 2.0 * std::numbers::pi * std::exp(-0.5 * (xi0 * xi0 + xi1 * xi1));
        CHECK(gspec[i].real() == doctest::Approx(expect).epsilon(1e-10));
        CHECK(std::abs(gspec[i].imag()) < 1e-12);
    }
}

TEST_CASE("gaussian kernel: mass, origin value, FFT semigroup") {
    CHECK_THROWS_AS(gaussian_kernel(Grid::cube(1, 4.0, 16), 0.0), std::invalid_argument);

    Grid g1 = Grid::cube(1, 12.0, 256);
    auto k1 = gaussian_kernel(g1, 1.0);
    CHECK(quad_integral(k1) == doctest::Approx(1.0).epsilon(1e-8));
    // value at the origin in 1-D at t = 1: (4 pi)^{-1/2}
    const int origin = 128;  // node at z = 0
    CHECK(g1.coord(0, origin) == doctest::Approx(0.0));
    CHECK(k1.values[static_cast<std::size_t>(origin)] ==
          doctest::Approx(std::pow(4.0 * std::numbers::pi, -0.5)).epsilon(1e-12));

    // semigroup under FFT convolution: G_s * G_t = G_{s+t}
    Grid g = Grid::cube(2, 14.0, 128);
    auto ks = gaussian_kernel(g, 0.7), kt = gaussian_kernel(g, 1.3), kst = gaussian_kernel(g, 2.0);
    auto ss = fourier_forward(g, ks.values), st = fourier_forward(g, kt.values);
    for (std::size_t i = 0; i < ss.size(); ++i) ss[i] *= st[i];
    auto conv = fourier_inverse_real(g, ss, 1e-8);
    double maxdiff = 0.0;
    for (std::size_t i = 0; i < conv.values.size(); ++i)
        maxdiff = std::max(maxdiff, std::abs(conv.values[i] - kst.values[i]));
    CHECK(maxdiff < 1e-8);
}

TEST_CASE("mixed-order kernel: mass, symmetry, Parseval") {
    DimensionSplit split(1, 1);
    Grid g = Grid::cube(2, 12.0, 128);
    auto k = mixed_kernel(g, split, 1.0);

    CHECK(quad_integral(k) == doctest::Approx(1.0).epsilon(1e-8));

    // even in x and in y separately (even symbol): mirror nodes i -> M - i
    const int M = 128;
    auto at = [&](int i, int j) {
        int idx[2] = {i, j};
        return k.values[g.flatten(idx)];
    };
    for (int i = 1; i < M; i += 13)
        for (int j = 1; j < M; j += 17) {
            CHECK(at(i, j) == doctest::Approx(at(M - i, j)).epsilon(1e-13));
            CHECK(at(i, j) == doctest::Approx(at(i, M - j)).epsilon(1e-13));
        }

    // Parseval: integral |G_t|^2 = (2 pi)^{-2} integral e^{-2t(xi^4 + eta^2)},
    // right side by independent quadrature on the dual grid
    GridFunction ksq = k;
    for (auto& v : ksq.values) v *= v;
    const double lhs = quad_integral(ksq);
    double rhs = 0.0;
    int idx[2];
    for (std::size_t i = 0; i < g.size(); ++i) {
        g.unflatten(i, idx);
        const double xi = dual_frequency(g, 0, idx[0]), eta = dual_frequency(g, 1, idx[1]);
        rhs += std::exp(-2.0 * (std::pow(xi, 4) + eta * eta));
    }
    rhs *= (std::numbers::pi / 12.0) * (std::numbers::pi / 12.0) / std::pow(2.0 * std::numbers::pi, 2);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-6));

    // sign-changing profile in the fourth-order direction
    double minv = 0.0;
    for (double v : k.values) minv = std::min(minv, v);
    CHECK(minv < -1e-6);
}

TEST_CASE("mixed-order kernel self-similarity is exact on scaled grids") {
    const KernelSpec spec = KernelSpec::mixed_order(1, 1);
    const double base[2] = {10.0, 10.0};
    const int counts[2] = {64, 64};
    const double t = 5.0;
    Grid gt = scaled_grid(spec, base, counts, t);
    Grid g1 = scaled_grid(spec, base, counts, 1.0);
    auto kt = mixed_kernel(gt, spec.split, t);
    auto k1 = mixed_kernel(g1, spec.split, 1.0);
    const double pref = std::pow(t, -0.25 - 0.5);
    double maxdiff = 0.0;
    for (std::size_t i = 0; i < kt.values.size(); ++i)
        maxdiff = std::max(maxdiff, std::abs(kt.values[i] - pref * k1.values[i]));
    CHECK(maxdiff < 1e-8);
}

TEST_CASE("kernel_derivative: base case, zero mean, finite-difference oracle") {
    const KernelSpec spec = KernelSpec::mixed_order(1, 1);
    Grid g = Grid::cube(2, 10.0, 128);
    const MultiIndex z0({0}), e1({1});

    auto base = kernel_derivative(spec, z0, z0, 1.0, g);
    auto k = mixed_kernel(g, spec.split, 1.0);
    double maxdiff = 0.0;
    for (std::size_t i = 0; i < k.values.size(); ++i)
        maxdiff = std::max(maxdiff, std::abs(base.values[i] - k.values[i]));
    CHECK(maxdiff < 1e-13);

    CHECK(std::abs(quad_integral(kernel_derivative(spec, e1, z0, 1.0, g))) < 1e-8);
    CHECK(std::abs(quad_integral(kernel_derivative(spec, z0, e1, 1.0, g))) < 1e-8);

    // centered difference in x of the kernel samples vs the multiplier route
    auto dx = kernel_derivative(spec, e1, z0, 1.0, g);
    const double h = g.spacing(0);
    maxdiff = 0.0;
    for (int i = 1; i < 127; ++i)
        for (int j = 0; j < 128; ++j) {
            int ip[2] = {i + 1, j}, im[2] = {i - 1, j}, ic[2] = {i, j};
            const double fd = (k.values[g.flatten(ip)] - k.values[g.flatten(im)]) / (2.0 * h);
            maxdiff = std::max(maxdiff, std::abs(fd - dx.values[g.flatten(ic)]));
        }
    CHECK(maxdiff < 1e-4);

    // spectrum of the kernel samples reproduces the symbol
    auto spec_vals = fourier_forward(g, k.values);
    int idx[2];
    double worst = 0.0;
    for (std::size_t i = 0; i < spec_vals.size(); i += 41) {
        g.unflatten(i, idx);
        double xi[2] = {dual_frequency(g, 0, idx[0]), dual_frequency(g, 1, idx[1])};
        worst = std::max(worst, std::abs(spec_vals[i].real() - spec.symbol(xi, 1.0)));
        worst = std::max(worst, std::abs(spec_vals[i].imag()));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("derivative decay slopes match the anisotropic law") {
    const KernelSpec spec = KernelSpec::mixed_order(1, 1);
    const std::vector<double> ts{1, 2, 4, 8, 16};
    DecayCheckOptions opt;
    opt.points = 64;

    const MultiIndex z0({0}), e1({1});
    const DecayFit mass = derivative_decay_check(spec, z0, z0, 1.0, ts, opt);
    CHECK(std::abs(mass.slope) < 0.02);

    const DecayFit dxfit = derivative_decay_check(spec, e1, z0, 1.0, ts, opt);
    CHECK(dxfit.slope == doctest::Approx(-0.25).epsilon(0.12));  // +-0.03 absolute
    CHECK(std::abs(dxfit.slope + 0.25) < 0.03);
    CHECK(dxfit.max_residual < 0.05);

    const DecayFit dyfit = derivative_decay_check(spec, z0, e1, 1.0, ts, opt);
    CHECK(std::abs(dyfit.slope + 0.5) < 0.03);
    CHECK(dyfit.max_residual < 0.05);

    CHECK_THROWS_AS(derivative_decay_check(spec, e1, z0, 1.0, std::vector<double>{1.0, 2.0}, opt),
                    std::invalid_argument);
}

TEST_CASE("isotropic derivative decay: -(|alpha|)/2 at q = 1") {
    const KernelSpec spec = KernelSpec::isotropic(1, 1);
    const std::vector<double> ts{1, 2, 4, 8};
    DecayCheckOptions opt;
    opt.points = 64;
    const DecayFit fit = derivative_decay_check(spec, MultiIndex({1}), MultiIndex({0}), 1.0, ts, opt);
    CHECK(std::abs(fit.slope + 0.5) < 0.03);
}
