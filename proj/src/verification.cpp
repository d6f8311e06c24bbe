#include "anisoheat/verification.hpp"

#include <cmath>
#include <stdexcept>

#include "anisoheat/gauss_poly.hpp"
#include "anisoheat/heisenberg.hpp"
#include "anisoheat/heisenberg_decomposition.hpp"
#include "anisoheat/moments.hpp"
#include "anisoheat/norms.hpp"

namespace anisoheat {

LemmaId lemma_from_string(const std::string& s) {
    if (s == "2.1") return LemmaId::L2_1;
    if (s == "2.2") return LemmaId::L2_2;
    if (s == "2.3") return LemmaId::L2_3;
    if (s == "3.3") return LemmaId::L3_3;
    if (s == "4.4") return LemmaId::L4_4;
    if (s == "4.5") return LemmaId::T4_5;
    throw std::invalid_argument("unknown lemma id '" + s + "' (expect 2.1, 2.2, 2.3, 3.3, 4.4 or 4.5)");
}

std::string lemma_name(LemmaId id) {
    switch (id) {
        case LemmaId::L2_1: return "2.1";
        case LemmaId::L2_2: return "2.2";
        case LemmaId::L2_3: return "2.3";
        case LemmaId::L3_3: return "3.3";
        case LemmaId::L4_4: return "4.4";
        case LemmaId::T4_5: return "4.5";
    }
    return "?";
}

namespace {

int draw_k(LemmaId id, int k, GaussPolySampler& rng) {
    if (k >= 0) {
        if (id == LemmaId::L3_3 && k % 2 == 0)
            throw std::invalid_argument("lemma 3.3 needs k odd");
        return k;
    }
    if (id == LemmaId::L3_3) return rng.uniform_int(0, 1) * 2 + 1;  // 1 or 3
    return rng.uniform_int(0, 3);
}

HPoint random_hpoint(int n, GaussPolySampler& rng, double radius) {
    std::vector<double> z(2 * static_cast<std::size_t>(n));
    for (double& v : z) v = rng.uniform(-radius, radius);
    return HPoint(std::move(z), rng.uniform(-radius, radius));
}

}  // namespace

SuiteResult run_lemma_suite(LemmaId id, int k, const DimensionSplit& split, int heis_n,
                            int instances, std::uint64_t seed) {
    SuiteResult res;
    res.instances = instances;
    res.tolerance = 1e-6;
    res.poly_tolerance = 1e-10;
    GaussPolySampler rng(seed);
    const bool heis = id == LemmaId::L4_4 || id == LemmaId::T4_5;
    const int dim = heis ? 2 * heis_n + 1 : split.dim();
    const GaussLegendre gl(64);

    for (int i = 0; i < instances; ++i) {
        const int ki = draw_k(id, k, rng);
        const GaussPoly phi = rng.sample(dim);
        double r = 0.0;
        switch (id) {
            case LemmaId::L2_1:
            case LemmaId::L2_3:
            case LemmaId::L3_3: {
                const auto f = SampledFunction::from_gauss_poly(rng.sample(dim));
                const DecompositionRule rule = id == LemmaId::L2_1   ? DecompositionRule::Lemma2_1
                                               : id == LemmaId::L2_3 ? DecompositionRule::Lemma2_3
                                                                     : DecompositionRule::Lemma3_3;
                r = verify_decomposition(f, phi, ki, rule, split);
                break;
            }
            case LemmaId::L2_2: {
                std::vector<double> z(static_cast<std::size_t>(dim));
                for (double& v : z) v = rng.uniform(-0.8, 0.8);
                r = taylor_split_check(phi, split, z, ki);
                break;
            }
            case LemmaId::L4_4:
                r = h_taylor_check(phi, random_hpoint(heis_n, rng, 0.8), gl);
                break;
            case LemmaId::T4_5: {
                const auto f = SampledFunction::from_gauss_poly(rng.sample(dim));
                r = h_decomposition_check(f, phi, heis_n);
                break;
            }
        }
        res.max_residual = std::max(res.max_residual, r);
    }

    // polynomial test functions: every remainder pairing vanishes identically
    {
        const int kp = k >= 0 ? k : (id == LemmaId::L3_3 ? 1 : 2);
        std::vector<GaussPoly> polys;
        polys.push_back(GaussPoly::polynomial(dim, MultiIndex::zero(dim)));
        polys.push_back(GaussPoly::polynomial(dim, MultiIndex::unit(dim, 0)));
        if (kp >= 2) {
            std::vector<int> e(static_cast<std::size_t>(dim), 0);
            e[0] = 2;
            polys.push_back(GaussPoly::polynomial(dim, MultiIndex(e)));
        }
        for (const GaussPoly& poly : polys) {
            double r = 0.0;
            switch (id) {
                case LemmaId::L2_1:
                case LemmaId::L2_3:
                case LemmaId::L3_3: {
                    const auto f = SampledFunction::from_gauss_poly(rng.sample(dim));
                    const DecompositionRule rule = id == LemmaId::L2_1   ? DecompositionRule::Lemma2_1
                                                   : id == LemmaId::L2_3 ? DecompositionRule::Lemma2_3
                                                                         : DecompositionRule::Lemma3_3;
                    r = verify_decomposition(f, poly, kp, rule, split);
                    break;
                }
                case LemmaId::L2_2: {
                    std::vector<double> z(static_cast<std::size_t>(dim));
                    for (double& v : z) v = rng.uniform(-0.8, 0.8);
                    r = taylor_split_check(poly, split, z, kp);
                    break;
                }
                case LemmaId::L4_4:
                    r = h_taylor_check(poly, random_hpoint(heis_n, rng, 0.8), gl);
                    break;
                case LemmaId::T4_5: {
                    const auto f = SampledFunction::from_gauss_poly(rng.sample(dim));
                    r = h_decomposition_check(f, poly, heis_n);
                    break;
                }
            }
            res.max_poly_residual = std::max(res.max_poly_residual, r);
        }
    }
    return res;
}

namespace {

GridFunction sample_functional(const SampledFunction& g, int dim, double R, int M) {
    return sample(Grid::cube(dim, R, M), [&](std::span<const double> z) { return g(z); });
}

}  // namespace

std::vector<BoundCheck> run_bound_suite(int k_max, int instances_per_case, std::uint64_t seed) {
    std::vector<BoundCheck> checks;
    GaussPolySampler rng(seed);
    const DimensionSplit split(1, 1);
    const int N = 2;

    auto add = [&](std::string name, double lhs, double rhs) {
        checks.push_back({std::move(name), lhs, rhs});
    };

    for (int k = 0; k <= k_max; ++k) {
        for (int inst = 0; inst < instances_per_case; ++inst) {
            const GaussPoly g = rng.sample(N);
            const auto f = SampledFunction::from_gauss_poly(g);
            const double R = f.decay_radius();
            const GridFunction fg = sample_functional(f, N, R, 128);
            const std::string tag = "k=" + std::to_string(k) + " i=" + std::to_string(inst);

            // Lemma 2.1: ||F_alpha||_p <= || |z|^{k+1} f ||_p, p in [1, N/(N-1))
            for (const auto& alpha : indices_of_order(N, k + 1)) {
                const GridFunction Fa = sample_functional(remainder_F_alpha(f, alpha, k), N, R, 96);
                for (double p : {1.0, 1.5}) {
                    add("L2.1 " + tag + " alpha=" + alpha.str() + " p=" + std::to_string(p),
                        weighted_lp_norm(Fa, WeightSpec::radial(0.0), p),
                        weighted_lp_norm(fg, WeightSpec::radial(k + 1), p));
                }
            }

            // ord.k+1: ||F_gamma||_p <= || |y|^{k+1} f ||_p
            {
                const MultiIndex gamma({k + 1});
                const GridFunction Fg =
                    sample_functional(remainder_F_gamma(f, split, gamma, k, false), N, R, 96);
                for (double p : {1.0, 1.5})
                    add("ord.k+1 " + tag + " p=" + std::to_string(p),
                        weighted_lp_norm(Fg, WeightSpec::radial(0.0), p),
                        weighted_lp_norm(fg, WeightSpec::split(0.0, k + 1), p, split));
            }

            // mab: ||[R f]_{beta gamma}||_1 <= mixed_norm(f, beta, gamma, 1)
            for (int g2 = 0; g2 <= k; ++g2) {
                const MultiIndex beta({k + 1 - g2}), gamma({g2});
                const GridFunction Rf = sample_functional(
                    remainder_R_betagamma(f, split, beta, gamma, k, RemainderRule::Lemma2_3), 1, R, 512);
                add("mab " + tag + " beta=" + beta.str() + " gamma=" + gamma.str(),
                    weighted_lp_norm(Rf, WeightSpec::radial(0.0), 1.0),
                    mixed_norm(fg, split, beta, gamma, 1.0));
            }

            if (k % 2 == 1) {
                // paso2.ord.k+1: ||F_gamma||_1 <= || |y|^{(k+1)/2} f ||_1
                const MultiIndex gamma({(k + 1) / 2});
                const GridFunction Fg =
                    sample_functional(remainder_F_gamma(f, split, gamma, k, true), N, R, 96);
                add("paso2.ord " + tag, weighted_lp_norm(Fg, WeightSpec::radial(0.0), 1.0),
                    weighted_lp_norm(fg, WeightSpec::split(0.0, 0.5 * (k + 1)), 1.0, split));

                // paso2.mab over |beta| + 2|gamma| = k+1, |gamma| <= (k-1)/2
                for (int g2 = 0; 2 * g2 <= k - 1; ++g2) {
                    const MultiIndex beta({k + 1 - 2 * g2}), gammab({g2});
                    const GridFunction Rf = sample_functional(
                        remainder_R_betagamma(f, split, beta, gammab, k, RemainderRule::Lemma3_3), 1, R,
                        512);
                    add("paso2.mab " + tag + " beta=" + beta.str() + " gamma=" + gammab.str(),
                        weighted_lp_norm(Rf, WeightSpec::radial(0.0), 1.0),
                        mixed_norm(fg, split, beta, gammab, 1.0));
                }
            }
        }
    }

    // Theorem 4.5 bounds on H^1
    for (int inst = 0; inst < instances_per_case; ++inst) {
        const int n = 1, dim = 3;
        const auto f = SampledFunction::from_gauss_poly(rng.sample(dim));
        const double R = f.decay_radius();
        const GridFunction fg = sample_functional(f, dim, R, 64);
        const std::string tag = "i=" + std::to_string(inst);

        const GridFunction F = sample_functional(h_remainder_F(f, n), dim, R, 64);
        add("T4.5 ||F|| " + tag, weighted_lp_norm(F, WeightSpec::radial(0.0), 1.0),
            weighted_lp_norm(fg, WeightSpec::split(0.0, 1.0), 1.0, DimensionSplit(2 * n, 1)));

        QuadOptions mopt;
        mopt.points = 64;
        const SampledFunction tmom = h_theta_moment(f, n, mopt);
        for (int j = 1; j <= 2 * n; ++j) {
            for (int kk = 1; kk <= 2 * n; ++kk) {
                const GridFunction Fjk =
                    sample_functional(h_remainder_Fjk(f, n, j, kk, &tmom), 2 * n, R, 96);
                // rhs: || z_j z_k f ||_1 via the sampled grid
                const Grid& gr = fg.grid;
                std::vector<double> pt(3);
                double rhs = 0.0;
                for (std::size_t i = 0; i < fg.values.size(); ++i) {
                    gr.node(i, pt.data());
                    rhs += std::abs(pt[static_cast<std::size_t>(j - 1)] * pt[static_cast<std::size_t>(kk - 1)] *
                                    fg.values[i]);
                }
                rhs *= gr.cell_volume();
                add("T4.5 ||F_" + std::to_string(j) + std::to_string(kk) + "|| " + tag,
                    weighted_lp_norm(Fjk, WeightSpec::radial(0.0), 1.0), rhs);
            }
        }
    }

    return checks;
}

}  // namespace anisoheat
