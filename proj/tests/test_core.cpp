#include <doctest.h>

#include <cmath>
#include <numbers>

#include "anisoheat/gauss_poly.hpp"
#include "anisoheat/grid.hpp"
#include "anisoheat/multi_index.hpp"
#include "anisoheat/norms.hpp"
#include "anisoheat/quadrature.hpp"
#include "oracles.hpp"

using namespace anisoheat;

TEST_CASE("multi-index order, factorial and enumeration") {
    MultiIndex a({2, 0, 3});
    CHECK(a.order() == 5);
    CHECK(a.factorial() == doctest::Approx(12.0));
    CHECK_THROWS_AS(MultiIndex({1, -1}), std::invalid_argument);

    CHECK(indices_of_order(2, 3).size() == 4);
    CHECK(indices_up_to(2, 2).size() == 6);
    CHECK(indices_up_to(3, 0).size() == 1);

    const double z[2] = {2.0, -3.0};
    CHECK(pow_multi(std::span<const double>(z, 2), MultiIndex({2, 1})) == doctest::Approx(-12.0));
}

TEST_CASE("grid geometry and indexing") {
    Grid g({2.0, 1.0}, {16, 8});
    CHECK(g.size() == 128);
    CHECK(g.spacing(0) == doctest::Approx(0.25));
    CHECK(g.coord(0, 0) == doctest::Approx(-2.0));
    CHECK(g.coord(1, 7) == doctest::Approx(0.75));  // half-open box: no +L node
    int idx[2] = {3, 5};
    std::size_t flat = g.flatten(idx);
    int back[2];
    g.unflatten(flat, back);
    CHECK(back[0] == 3);
    CHECK(back[1] == 5);
    CHECK_THROWS_AS(Grid({1.0}, {7}), std::invalid_argument);
    CHECK_THROWS_AS(Grid({1.0}, {6}), std::invalid_argument);
}

TEST_CASE("quad_integral: constants, Gaussian mass, zero") {
    // f == 1 on [-1,1)^2 integrates to the cell measure 4 for any M
    for (int M : {8, 32, 100}) {
        Grid g = Grid::cube(2, 1.0, M);
        CHECK(quad_integral(GridFunction(g, std::vector<double>(g.size(), 1.0))) ==
              doctest::Approx(4.0).epsilon(1e-14));
    }
    // Gaussian on R^2 truncated at L=8: integral = pi
    Grid g = Grid::cube(2, 8.0, 128);
    GridFunction f = sample(g, [](std::span<const double> z) {
        return std::exp(-(z[0] * z[0] + z[1] * z[1]));
    });
    CHECK(quad_integral(f) == doctest::Approx(std::numbers::pi).epsilon(1e-8));
    CHECK(quad_integral(GridFunction::zeros(g)) == 0.0);

    GridFunction bad = f;
    bad.values[0] = std::nan("");
    CHECK_THROWS_AS(quad_integral(bad), std::domain_error);
}

TEST_CASE("quadrature linearity and refinement convergence") {
    Grid g = Grid::cube(2, 8.0, 64);
    auto fa = sample(g, [](std::span<const double> z) { return std::exp(-z[0] * z[0] - z[1] * z[1]); });
    auto fb = sample(g, [](std::span<const double> z) { return z[0] * std::exp(-z[0] * z[0] - 0.5 * z[1] * z[1]); });
    GridFunction combo = fa;
    for (std::size_t i = 0; i < combo.values.size(); ++i)
        combo.values[i] = 2.5 * fa.values[i] - 1.25 * fb.values[i];
    CHECK(quad_integral(combo) ==
          doctest::Approx(2.5 * quad_integral(fa) - 1.25 * quad_integral(fb)).epsilon(1e-14));

    // refinement: error vs the analytic value decreases monotonically
    const double exact = std::numbers::pi;
    double prev = 1.0;
    for (int M : {16, 32, 64}) {
        Grid gm = Grid::cube(2, 8.0, M);
        auto fm = sample(gm, [](std::span<const double> z) { return std::exp(-z[0] * z[0] - z[1] * z[1]); });
        const double err = std::abs(quad_integral(fm) - exact);
        CHECK(err < prev);
        prev = err;
    }
}

TEST_CASE("Gauss-Legendre integrates polynomials and Gaussians") {
    GaussLegendre gl(16);
    CHECK(gl.integrate([](double x) { return x * x * x + 2.0; }, -1.0, 3.0) ==
          doctest::Approx(4.0 * 2.0 + (81.0 - 1.0) / 4.0).epsilon(1e-13));
    CHECK(GaussLegendre(48).integrate([](double x) { return std::exp(-x * x); }, -8.0, 8.0) ==
          doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-12));
}

TEST_CASE("weighted_lp_norm: spec examples") {
    // constant 1 on [-1,1), p = 1, unit weight -> 2
    Grid g1 = Grid::cube(1, 1.0, 64);
    CHECK(weighted_lp_norm(GridFunction(g1, std::vector<double>(64, 1.0)), WeightSpec::radial(0.0),
                           1.0) == doctest::Approx(2.0).epsilon(1e-14));

    // |z| weight against exp(-z^2): integral |z| e^{-z^2} dz = 1. The weight
    // kink at 0 makes the trapezoid O(h^2) here, so the 1-D grid is fine.
    Grid g = Grid::cube(1, 8.0, 1 << 17);
    auto f = sample(g, [](std::span<const double> z) { return std::exp(-z[0] * z[0]); });
    CHECK(weighted_lp_norm(f, WeightSpec::radial(1.0), 1.0) == doctest::Approx(1.0).epsilon(1e-8));

    CHECK(weighted_lp_norm(GridFunction::zeros(g), WeightSpec::radial(1.0), 1.0) == 0.0);
    CHECK_THROWS_AS(weighted_lp_norm(f, WeightSpec::radial(1.0), 0.5), std::invalid_argument);
    CHECK_THROWS_AS(WeightSpec::radial(-1.0), std::invalid_argument);
}

TEST_CASE("norm homogeneity and triangle inequality") {
    Grid g = Grid::cube(2, 6.0, 48);
    GaussPolySampler rng(7);
    for (int i = 0; i < 5; ++i) {
        auto a = rng.sample(2), b = rng.sample(2);
        auto fa = sample(g, [&](std::span<const double> z) { return a.eval(z); });
        auto fb = sample(g, [&](std::span<const double> z) { return b.eval(z); });
        GridFunction sum = fa;
        GridFunction scaled = fa;
        for (std::size_t j = 0; j < sum.values.size(); ++j) {
            sum.values[j] += fb.values[j];
            scaled.values[j] *= -3.5;
        }
        for (double p : {1.0, 2.0}) {
            const WeightSpec w = WeightSpec::radial(1.0);
            CHECK(weighted_lp_norm(scaled, w, p) ==
                  doctest::Approx(3.5 * weighted_lp_norm(fa, w, p)).epsilon(1e-12));
            CHECK(weighted_lp_norm(sum, w, p) <=
                  weighted_lp_norm(fa, w, p) + weighted_lp_norm(fb, w, p) + 1e-12);
        }
        DimensionSplit split(1, 1);
        MultiIndex beta({1}), gamma({1});
        CHECK(mixed_norm(sum, split, beta, gamma, 1.5) <=
              mixed_norm(fa, split, beta, gamma, 1.5) + mixed_norm(fb, split, beta, gamma, 1.5) + 1e-12);
        CHECK(xp_norm(sum, split, 1, 1.0) <= xp_norm(fa, split, 1, 1.0) + xp_norm(fb, split, 1, 1.0) + 1e-12);
    }
}

TEST_CASE("mixed_norm: Fubini collapse at p = 1 and a p = 2 oracle") {
    Grid g = Grid::cube(2, 9.0, 128);
    DimensionSplit split(1, 1);
    GaussPolySampler rng(3);
    const GaussPoly gp = rng.sample(2, 0);  // pure Gaussian instance
    auto f = sample(g, [&](std::span<const double> z) { return gp.eval(z); });

    MultiIndex beta({2}), gamma({1});
    CHECK(mixed_norm(f, split, beta, gamma, 1.0) ==
          doctest::Approx(weighted_lp_norm(f, WeightSpec::split(2.0, 1.0), 1.0, split))
              .epsilon(1e-10));

    // f = exp(-x^2 - y^2), beta = (1), gamma = (0), p = 2:
    // norm^2 = pi * int x^2 e^{-2 x^2} dx, by independent Simpson quadrature
    auto fg = sample(g, [](std::span<const double> z) { return std::exp(-z[0] * z[0] - z[1] * z[1]); });
    const double inner = oracle::simpson([](double y) { return std::exp(-y * y); }, -9.0, 9.0);
    const double outer =
        oracle::simpson([&](double x) { return x * x * std::exp(-2.0 * x * x) * inner * inner; }, -9.0, 9.0);
    CHECK(mixed_norm(fg, split, MultiIndex({1}), MultiIndex({0}), 2.0) ==
          doctest::Approx(std::sqrt(outer)).epsilon(1e-8));

    CHECK(mixed_norm(GridFunction::zeros(g), split, beta, gamma, 2.0) == 0.0);
    CHECK_THROWS_AS(mixed_norm(f, split, MultiIndex({1, 0}), gamma, 1.0), std::invalid_argument);
}

TEST_CASE("xp_norm: pieces against 1-D oracles and p = 1 comparability") {
    Grid g = Grid::cube(2, 9.0, 512);
    DimensionSplit split(1, 1);
    auto f = sample(g, [](std::span<const double> z) { return std::exp(-z[0] * z[0] - z[1] * z[1]); });

    // k = 0, separable Gaussian: the single mixed piece || |x| f ||_{L1_x L1_y}
    // and the weighted piece || |y| f ||_{L1} both equal absmom * gauss_l1
    const double gauss_l1 = oracle::simpson([](double u) { return std::exp(-u * u); }, -9.0, 9.0);
    const double absmom = oracle::simpson([](double u) { return std::abs(u) * std::exp(-u * u); }, -9.0, 9.0);
    CHECK(xp_norm(f, split, 0, 1.0) == doctest::Approx(2.0 * absmom * gauss_l1).epsilon(5e-4));

    CHECK(xp_norm(GridFunction::zeros(g), split, 0, 1.0) == 0.0);

    // p = 1: X^1 is L^1(|(x,y)|^{k+1}) up to fixed constants; check two-sided
    // comparability on a family of Gaussians
    GaussPolySampler rng(11);
    for (int i = 0; i < 4; ++i) {
        auto gp = rng.sample(2, 1);
        auto ff = sample(g, [&](std::span<const double> z) { return gp.eval(z); });
        for (int k : {0, 1, 2}) {
            const double xp = xp_norm(ff, split, k, 1.0);
            const double radial = weighted_lp_norm(ff, WeightSpec::radial(k + 1.0), 1.0);
            CHECK(xp / radial > 0.3);
            CHECK(xp / radial < 8.0);
        }
    }
}

TEST_CASE("GaussPoly: evaluation, derivatives, integrals, Fourier transform") {
    GaussPolySampler rng(42);
    for (int i = 0; i < 6; ++i) {
        const GaussPoly g = rng.sample(2);
        const double pt[2] = {0.37, -0.81};

        // derivative vs central difference on both axes
        for (int axis : {0, 1}) {
            const GaussPoly d = g.derivative(axis);
            const double fd = oracle::central_diff(
                [&](double u) {
                    double q[2] = {pt[0], pt[1]};
                    q[axis] = u;
                    return g.eval(std::span<const double>(q, 2));
                },
                pt[axis]);
            CHECK(d.eval(std::span<const double>(pt, 2)) == doctest::Approx(fd).epsilon(5e-7));
        }

        // integral and second moment vs Simpson
        const double R = g.decay_radius();
        CHECK(g.integral() ==
              doctest::Approx(oracle::simpson2(
                                  [&](double x, double y) {
                                      double q[2] = {x, y};
                                      return g.eval(std::span<const double>(q, 2));
                                  },
                                  std::min(R, 12.0)))
                  .epsilon(1e-9));
        CHECK(g.moment(MultiIndex({2, 0})) ==
              doctest::Approx(oracle::simpson2(
                                  [&](double x, double y) {
                                      double q[2] = {x, y};
                                      return x * x * g.eval(std::span<const double>(q, 2));
                                  },
                                  std::min(R, 12.0)))
                  .epsilon(1e-9));

        // Fourier transform vs direct oscillatory quadrature
        const double xi[2] = {0.9, -1.7};
        const double re = oracle::simpson2(
            [&](double x, double y) {
                double q[2] = {x, y};
                return g.eval(std::span<const double>(q, 2)) * std::cos(x * xi[0] + y * xi[1]);
            },
            std::min(R, 12.0));
        const double im = oracle::simpson2(
            [&](double x, double y) {
                double q[2] = {x, y};
                return -g.eval(std::span<const double>(q, 2)) * std::sin(x * xi[0] + y * xi[1]);
            },
            std::min(R, 12.0));
        const auto hat = g.fourier(std::span<const double>(xi, 2));
        CHECK(hat.real() == doctest::Approx(re).epsilon(1e-8));
        CHECK(hat.imag() == doctest::Approx(im).epsilon(1e-8));

        // decay radius really bounds the support
        double q[2] = {R, 0.0};
        CHECK(std::abs(g.eval(std::span<const double>(q, 2))) < 1e-12);
    }
}

TEST_CASE("GaussPoly polynomial multiplication keeps values consistent") {
    GaussPolySampler rng(5);
    const GaussPoly g = rng.sample(2);
    const GaussPoly gm = g.times_monomial(0, 2).times_monomial(1, 1);
    const double pt[2] = {1.3, -0.4};
    CHECK(gm.eval(std::span<const double>(pt, 2)) ==
          doctest::Approx(pt[0] * pt[0] * pt[1] * g.eval(std::span<const double>(pt, 2)))
              .epsilon(1e-12));
}
