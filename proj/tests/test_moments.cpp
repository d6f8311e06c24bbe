#include <doctest.h>

#include <cmath>
#include <numbers>

#include "anisoheat/moments.hpp"
#include "anisoheat/norms.hpp"
#include "oracles.hpp"

using namespace anisoheat;

namespace {

SampledFunction unit_gaussian(int dim) {
    std::vector<double> w(static_cast<std::size_t>(dim), 1.0), c(static_cast<std::size_t>(dim), 0.0);
    return SampledFunction::from_gauss_poly(GaussPoly::gaussian(w, c));
}

/// f(lambda z) for a separable Gaussian-polynomial function (test-side helper)
GaussPoly dilate(const GaussPoly& g, double lambda) {
    GaussPoly out(g.dim());
    for (const auto& term : g.terms()) {
        GaussPoly::Term t = term;
        for (auto& ax : t.ax) {
            std::vector<double> c = ax.p.coeffs();
            double lp = 1.0;
            for (auto& v : c) {
                v *= lp;
                lp *= lambda;
            }
            ax.p = Polynomial(std::move(c));
            ax.a *= lambda * lambda;
            ax.mu /= lambda;
        }
        out.add_term(std::move(t));
    }
    return out;
}

}  // namespace

TEST_CASE("moment: Gaussian examples against analytic oracles") {
    const auto f = unit_gaussian(2);
    CHECK(moment(f, MultiIndex({0, 0})) == doctest::Approx(std::numbers::pi).epsilon(1e-8));
    CHECK(std::abs(moment(f, MultiIndex({1, 0}))) < 1e-10);
    // int x^2 e^{-x^2} = sqrt(pi)/2 per axis
    CHECK(moment(f, MultiIndex({2, 0})) == doctest::Approx(0.5 * std::numbers::pi).epsilon(1e-8));
    CHECK_THROWS_AS(moment(f, MultiIndex({1})), std::invalid_argument);
}

TEST_CASE("moment linearity and dilation covariance") {
    GaussPolySampler rng(17);
    const GaussPoly g = rng.sample(2);
    const double lambda = 1.7;
    const auto f = SampledFunction::from_gauss_poly(g);
    const auto fl = SampledFunction::from_gauss_poly(dilate(g, lambda));
    for (const auto& alpha : indices_up_to(2, 2)) {
        const double m = moment(f, alpha);
        const double ml = moment(fl, alpha);
        CHECK(ml == doctest::Approx(std::pow(lambda, -2.0 - alpha.order()) * m).epsilon(1e-8));
    }
}

TEST_CASE("moment_table index sets") {
    const auto f = unit_gaussian(2);
    const DimensionSplit split(1, 1);
    const auto full = moment_table(f, 2, MomentConstraint::Full);
    CHECK(full.values.size() == 6);
    const auto mixed = moment_table(f, 2, MomentConstraint::MixedOrder, &split);
    // |beta| + 2|gamma| <= 2 with m = n = 1: (0,0), (1,0), (2,0), (0,1)
    CHECK(mixed.values.size() == 4);
    CHECK(mixed.at(MultiIndex({0, 0})) == doctest::Approx(std::numbers::pi).epsilon(1e-8));
}

TEST_CASE("y_moment: analytic oracle, odd vanishing, linearity") {
    const DimensionSplit split(1, 1);
    const auto f = unit_gaussian(2);
    const auto m0 = y_moment(f, split, MultiIndex({0}));
    for (double x : {0.0, 0.5, -1.3}) {
        CHECK(m0(std::span<const double>(&x, 1)) ==
              doctest::Approx(std::sqrt(std::numbers::pi) * std::exp(-x * x)).epsilon(1e-8));
    }

    // odd in y: gamma = 0 moment vanishes identically
    const auto odd = SampledFunction::from_gauss_poly(
        GaussPoly::gaussian(std::vector<double>{1.0, 1.0}, std::vector<double>{0.0, 0.0})
            .times_monomial(1, 1));
    const auto modd = y_moment(odd, split, MultiIndex({0}));
    for (double x : {0.0, 0.7}) CHECK(std::abs(modd(std::span<const double>(&x, 1))) < 1e-12);

    // linearity through a combined instance
    GaussPolySampler rng(23);
    const GaussPoly a = rng.sample(2), b = rng.sample(2);
    const auto ma = y_moment(SampledFunction::from_gauss_poly(a), split, MultiIndex({1}));
    const auto mb = y_moment(SampledFunction::from_gauss_poly(b), split, MultiIndex({1}));
    const auto mab = y_moment(SampledFunction::from_gauss_poly(a + b.scaled(2.0)), split, MultiIndex({1}));
    const double x = 0.4;
    CHECK(mab(std::span<const double>(&x, 1)) ==
          doctest::Approx(ma(std::span<const double>(&x, 1)) + 2.0 * mb(std::span<const double>(&x, 1)))
              .epsilon(1e-10));
}

TEST_CASE("remainder_F_alpha: zero input, L1 bound with slack") {
    const auto zero = SampledFunction(1, 8.0, [](std::span<const double>) { return 0.0; });
    const auto F0 = remainder_F_alpha(zero, MultiIndex({1}), 0);
    for (double x : {0.1, 0.9, -2.0}) CHECK(F0(std::span<const double>(&x, 1)) == 0.0);

    // k = 0, N = 1: ||F_alpha||_1 <= || |x| f ||_1 with visible slack
    const auto f = unit_gaussian(1);
    const auto Fa = remainder_F_alpha(f, MultiIndex({1}), 0);
    const Grid g = Grid::cube(1, f.decay_radius(), 2048);
    const auto Fg = sample(g, [&](std::span<const double> x) { return Fa(x); });
    const auto fg = sample(g, [&](std::span<const double> x) { return f(x); });
    const double lhs = weighted_lp_norm(Fg, WeightSpec::radial(0.0), 1.0);
    const double rhs = weighted_lp_norm(fg, WeightSpec::radial(1.0), 1.0);
    CHECK(lhs <= rhs + 1e-8);
    CHECK(lhs > 0.1 * rhs);  // nontrivial remainder

    CHECK_THROWS_AS(remainder_F_alpha(f, MultiIndex({2}), 0), std::invalid_argument);
}

TEST_CASE("remainder_F_gamma bounds: full and half order") {
    const DimensionSplit split(1, 1);
    const auto f = unit_gaussian(2);
    const double R = f.decay_radius();
    const Grid g = Grid::cube(2, R, 160);
    const auto fg = sample(g, [&](std::span<const double> z) { return f(z); });

    // k = 0, |gamma| = 1: ||F_gamma||_1 <= || |y| f ||_1
    const auto Fg = remainder_F_gamma(f, split, MultiIndex({1}), 0, false);
    const auto Fs = sample(g, [&](std::span<const double> z) { return Fg(z); });
    CHECK(weighted_lp_norm(Fs, WeightSpec::radial(0.0), 1.0) <=
          weighted_lp_norm(fg, WeightSpec::split(0.0, 1.0), 1.0, split) + 1e-8);

    // k = 1 half rule: |gamma| = 1, bound by || |y| f ||_1
    const auto Fh = remainder_F_gamma(f, split, MultiIndex({1}), 1, true);
    const auto Fhs = sample(g, [&](std::span<const double> z) { return Fh(z); });
    CHECK(weighted_lp_norm(Fhs, WeightSpec::radial(0.0), 1.0) <=
          weighted_lp_norm(fg, WeightSpec::split(0.0, 1.0), 1.0, split) + 1e-8);

    CHECK_THROWS_AS(remainder_F_gamma(f, split, MultiIndex({1}), 2, true), std::invalid_argument);
    CHECK_THROWS_AS(remainder_F_gamma(f, split, MultiIndex({2}), 2, false), std::invalid_argument);
}

TEST_CASE("remainder_R_betagamma: vanishing inner moment and the mab bound") {
    const DimensionSplit split(1, 1);

    // f odd in y with gamma = (0): the y moment vanishes, so [R f] = 0
    const auto odd = SampledFunction::from_gauss_poly(
        GaussPoly::gaussian(std::vector<double>{1.0, 1.0}, std::vector<double>{0.0, 0.0})
            .times_monomial(1, 1));
    const auto R0 = remainder_R_betagamma(odd, split, MultiIndex({2}), MultiIndex({0}), 1,
                                          RemainderRule::Lemma2_3);
    for (double x : {0.3, 1.1}) CHECK(std::abs(R0(std::span<const double>(&x, 1))) < 1e-12);

    // mab bound at k = 1, beta = (2), gamma = (0)
    const auto f = unit_gaussian(2);
    const auto Rf = remainder_R_betagamma(f, split, MultiIndex({2}), MultiIndex({0}), 1,
                                          RemainderRule::Lemma2_3);
    const Grid gx = Grid::cube(1, f.decay_radius(), 1024);
    const auto Rs = sample(gx, [&](std::span<const double> x) { return Rf(x); });
    const Grid g2 = Grid::cube(2, f.decay_radius(), 160);
    const auto fg = sample(g2, [&](std::span<const double> z) { return f(z); });
    CHECK(weighted_lp_norm(Rs, WeightSpec::radial(0.0), 1.0) <=
          mixed_norm(fg, split, MultiIndex({2}), MultiIndex({0}), 1.0) + 1e-8);

    CHECK_THROWS_AS(remainder_R_betagamma(f, split, MultiIndex({1}), MultiIndex({0}), 1,
                                          RemainderRule::Lemma2_3),
                    std::invalid_argument);
    CHECK_THROWS_AS(remainder_R_betagamma(f, split, MultiIndex({2}), MultiIndex({1}), 2,
                                          RemainderRule::Lemma3_3),
                    std::invalid_argument);
}

TEST_CASE("taylor_split_check: polynomial exactness and Gaussian residual") {
    const DimensionSplit split(1, 1);
    GaussPolySampler rng(31);

    // polynomial of total degree <= k: all remainders vanish
    const GaussPoly poly = GaussPoly::polynomial(2, MultiIndex({1, 1}));
    double z[2] = {0.8, -0.6};
    CHECK(taylor_split_check(poly, split, std::span<const double>(z, 2), 2) < 1e-12);

    // z = 0: both sides equal phi(0)
    const GaussPoly phi = rng.sample(2);
    double zero[2] = {0.0, 0.0};
    CHECK(taylor_split_check(phi, split, std::span<const double>(zero, 2), 1) < 1e-14);

    // Gaussian test function at random points, k = 2
    for (int i = 0; i < 8; ++i) {
        const GaussPoly g = rng.sample(2);
        double pt[2] = {rng.uniform(-0.8, 0.8), rng.uniform(-0.8, 0.8)};
        CHECK(taylor_split_check(g, split, std::span<const double>(pt, 2), 2) < 1e-10);
    }
}

TEST_CASE("verify_decomposition: all three rules on Gaussian data") {
    const DimensionSplit split(1, 1);
    GaussPolySampler rng(101);

    // polynomial phi of degree <= k: only the delta terms survive
    const auto f0 = SampledFunction::from_gauss_poly(rng.sample(2));
    CHECK(verify_decomposition(f0, GaussPoly::polynomial(2, MultiIndex({1, 0})), 1,
                               DecompositionRule::Lemma2_1, split) < 1e-10);

    // spec instance: f = e^{-|z|^2}, phi = z_1^2 e^{-|z|^2}, k = 1, N = 2
    const auto f = unit_gaussian(2);
    const GaussPoly phi =
        GaussPoly::gaussian(std::vector<double>{1.0, 1.0}, std::vector<double>{0.0, 0.0})
            .times_monomial(0, 2);
    CHECK(verify_decomposition(f, phi, 1, DecompositionRule::Lemma2_1, split) < 1e-6);

    // randomized instances across the rules
    for (int i = 0; i < 3; ++i) {
        const auto fr = SampledFunction::from_gauss_poly(rng.sample(2));
        const GaussPoly pr = rng.sample(2);
        CHECK(verify_decomposition(fr, pr, i % 2 + 1, DecompositionRule::Lemma2_1, split) < 1e-6);
        CHECK(verify_decomposition(fr, pr, i % 2 + 1, DecompositionRule::Lemma2_3, split) < 1e-6);
        CHECK(verify_decomposition(fr, pr, 2 * (i % 2) + 1, DecompositionRule::Lemma3_3, split) < 1e-6);
    }

    // the spec's lemma3_3 example: f = e^{-x^2-y^2}, phi = (x^2 + y) e^{-x^2-y^2}
    GaussPoly phi33 =
        GaussPoly::gaussian(std::vector<double>{1.0, 1.0}, std::vector<double>{0.0, 0.0})
            .times_monomial(0, 2) +
        GaussPoly::gaussian(std::vector<double>{1.0, 1.0}, std::vector<double>{0.0, 0.0})
            .times_monomial(1, 1);
    CHECK(verify_decomposition(f, phi33, 1, DecompositionRule::Lemma3_3, split) < 1e-6);

    CHECK_THROWS_AS(verify_decomposition(f, phi, 2, DecompositionRule::Lemma3_3, split),
                    std::invalid_argument);
}

TEST_CASE("main-term tables of lemma 2.1 and lemma 2.3 coincide") {
    // the delta coefficients are the same moments in both rules; check the
    // table entries agree entry by entry
    GaussPolySampler rng(7);
    const auto f = SampledFunction::from_gauss_poly(rng.sample(2));
    const auto full = moment_table(f, 2, MomentConstraint::Full);
    for (const auto& [idx, val] : full.values) {
        const double again = moment(f, MultiIndex(idx));
        CHECK(val == doctest::Approx(again).epsilon(1e-14));
    }
}

TEST_CASE("lp range gate") {
    CHECK(lp_range_ok(1.0, 3));
    CHECK(lp_range_ok(1.4, 1));
    CHECK(lp_range_ok(1.4, 2));
    CHECK_FALSE(lp_range_ok(2.0, 2));
    CHECK_FALSE(lp_range_ok(1.6, 3));
}
