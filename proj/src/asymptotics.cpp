#include "anisoheat/asymptotics.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "anisoheat/fft.hpp"
#include "anisoheat/heisenberg_convolution.hpp"
#include "anisoheat/heisenberg_kernel.hpp"
#include "anisoheat/moments.hpp"
#include "anisoheat/parallel.hpp"

namespace anisoheat {

std::vector<std::pair<MultiIndex, MultiIndex>> ExpansionRule::index_set(
    const DimensionSplit& split) const {
    std::vector<std::pair<MultiIndex, MultiIndex>> out;
    switch (kind) {
        case Kind::IsotropicFull:
        case Kind::SplitFull:
            for (int g = 0; g <= k; ++g)
                for (const auto& gamma : indices_of_order(split.n, g))
                    for (int b = 0; b + g <= k; ++b)
                        for (const auto& beta : indices_of_order(split.m, b)) out.emplace_back(beta, gamma);
            break;
        case Kind::MixedOrder:
            for (int g = 0; 2 * g <= k; ++g)
                for (const auto& gamma : indices_of_order(split.n, g))
                    for (int b = 0; b + 2 * g <= k; ++b)
                        for (const auto& beta : indices_of_order(split.m, b)) out.emplace_back(beta, gamma);
            break;
        case Kind::HeisenbergFirstOrder:
            throw std::invalid_argument("ExpansionRule: the Heisenberg rule has no (beta, gamma) set");
    }
    return out;
}

std::vector<std::pair<int, int>> lambda_set(double p, int k, int N) {
    if (p < 1.0 || k < 0 || N < 1) throw std::invalid_argument("lambda_set: bad arguments");
    const double lower = k + 1 - 2.0 * N * (1.0 - 1.0 / p);
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a <= k; ++a)
        for (int b = 0; b <= k; ++b)
            if (a + b <= k && static_cast<double>(a + 2 * b) >= lower) out.emplace_back(a, b);
    return out;
}

namespace {

/// spectrum of f on the dual grid: exact transform when available, else the
/// DFT of the samples (accurate only while the grid resolves f)
std::vector<std::complex<double>> f_spectrum(const SampledFunction& f, const Grid& g) {
    std::vector<std::complex<double>> s(g.size());
    if (f.has_fourier()) {
        std::vector<int> idx(static_cast<std::size_t>(g.dim()));
        std::vector<double> xi(static_cast<std::size_t>(g.dim()));
        for (std::size_t i = 0; i < s.size(); ++i) {
            g.unflatten(i, idx.data());
            for (int a = 0; a < g.dim(); ++a)
                xi[static_cast<std::size_t>(a)] = dual_frequency(g, a, idx[static_cast<std::size_t>(a)]);
            s[i] = f.fourier(xi);
        }
        return s;
    }
    const GridFunction fg = sample(g, [&](std::span<const double> z) { return f(z); });
    return fourier_forward(g, fg.values);
}

GridFunction heisenberg_approximant(const SampledFunction& f, const KernelSpec& spec, double t,
                                    const Grid& grid) {
    const int n = spec.heis_n;
    const int N = 2 * n + 1;
    if (grid.dim() != N) throw std::invalid_argument("build_approximant: grid must have 2n+1 axes");
    QuadOptions mopt;
    const double mass = moment(f, MultiIndex::zero(N), mopt);
    std::vector<double> zmom(static_cast<std::size_t>(2 * n));
    for (int j = 0; j < 2 * n; ++j) zmom[static_cast<std::size_t>(j)] = moment(f, MultiIndex::unit(N, j), mopt);

    const HeisenbergKernel kernel(n);
    GridFunction a = GridFunction::zeros(grid);
    parallel_for(grid.size(), [&](std::size_t b, std::size_t e) {
        std::vector<double> pt(static_cast<std::size_t>(N));
        for (std::size_t i = b; i < e; ++i) {
            grid.node(i, pt.data());
            const std::span<const double> z(pt.data(), static_cast<std::size_t>(2 * n));
            const double theta = pt[static_cast<std::size_t>(2 * n)];
            double v = mass * kernel.value_t(z, theta, t);
            for (int j = 1; j <= 2 * n; ++j) {
                const double mj = zmom[static_cast<std::size_t>(j - 1)];
                if (mj != 0.0)
                    v -= mj * kernel.derivative(HeisenbergKernel::Deriv::Zj, j, 0, z, theta, t);
            }
            a.values[i] = v;
        }
    });
    return a;
}

}  // namespace

GridFunction build_approximant(const SampledFunction& f, const KernelSpec& spec,
                               const ExpansionRule& rule, double t, const Grid& grid) {
    if (t <= 0.0) throw std::invalid_argument("build_approximant: t > 0 required");
    if (rule.kind == ExpansionRule::Kind::HeisenbergFirstOrder) {
        if (spec.family != KernelFamily::Heisenberg)
            throw std::invalid_argument("build_approximant: rule/family mismatch");
        return heisenberg_approximant(f, spec, t, grid);
    }
    if (spec.family == KernelFamily::Heisenberg)
        throw std::invalid_argument("build_approximant: rule/family mismatch");
    if (rule.kind == ExpansionRule::Kind::MixedOrder && spec.family != KernelFamily::MixedOrder)
        throw std::invalid_argument("build_approximant: mixed-order rule needs the mixed-order family");
    if (grid.dim() != spec.split.dim())
        throw std::invalid_argument("build_approximant: grid/spec dimension mismatch");

    const auto set = rule.index_set(spec.split);
    struct Term {
        MultiIndex alpha;
        double coef;
    };
    std::vector<Term> terms;
    QuadOptions mopt;
    for (const auto& [beta, gamma] : set) {
        std::vector<int> e = beta.exponents();
        e.insert(e.end(), gamma.exponents().begin(), gamma.exponents().end());
        MultiIndex alpha(std::move(e));
        const double mom = moment(f, alpha, mopt);
        const double sign = alpha.order() % 2 == 0 ? 1.0 : -1.0;
        terms.push_back({alpha, sign / (beta.factorial() * gamma.factorial()) * mom});
    }

    // single inverse transform of the weighted multiplier sum
    std::vector<std::complex<double>> spec_vals(grid.size());
    std::vector<int> idx(static_cast<std::size_t>(grid.dim()));
    std::vector<double> xi(static_cast<std::size_t>(grid.dim()));
    for (std::size_t i = 0; i < spec_vals.size(); ++i) {
        grid.unflatten(i, idx.data());
        bool nyquist = false;
        for (int a = 0; a < grid.dim(); ++a) {
            xi[static_cast<std::size_t>(a)] = dual_frequency(grid, a, idx[static_cast<std::size_t>(a)]);
            if (idx[static_cast<std::size_t>(a)] == grid.count(a) / 2) nyquist = true;
        }
        if (nyquist) {
            spec_vals[i] = 0.0;  // unpaired mode; symbol weight is negligible there
            continue;
        }
        std::complex<double> mult = 0.0;
        for (const Term& term : terms) {
            std::complex<double> mono = term.coef;
            for (int a = 0; a < grid.dim(); ++a)
                for (int pwr = 0; pwr < term.alpha[a]; ++pwr)
                    mono *= std::complex<double>(0.0, xi[static_cast<std::size_t>(a)]);
            mult += mono;
        }
        spec_vals[i] = mult * spec.symbol(xi, t);
    }
    return fourier_inverse_real(grid, spec_vals, 1e-9);
}

GridFunction solve(const SampledFunction& f, const KernelSpec& spec, double t, const Grid& grid) {
    if (t <= 0.0) throw std::invalid_argument("solve: t > 0 required");
    if (spec.family == KernelFamily::Heisenberg) {
        const int n = spec.heis_n;
        std::vector<double> exts(static_cast<std::size_t>(2 * n) + 1, 6.0);
        std::vector<int> counts(static_cast<std::size_t>(2 * n), 40);
        counts.push_back(24);
        const HGrid src(Grid(exts, counts), n);
        const GridFunction fs = sample(src.grid, [&](std::span<const double> z) { return f(z); });
        const HKernelTable table(n, SigmaQuadrature::make(n));
        return h_convolve(src, fs, table, t, HGrid(grid, n));
    }
    auto spectrum = f_spectrum(f, grid);
    std::vector<int> idx(static_cast<std::size_t>(grid.dim()));
    std::vector<double> xi(static_cast<std::size_t>(grid.dim()));
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
        grid.unflatten(i, idx.data());
        for (int a = 0; a < grid.dim(); ++a)
            xi[static_cast<std::size_t>(a)] = dual_frequency(grid, a, idx[static_cast<std::size_t>(a)]);
        spectrum[i] *= spec.symbol(xi, t);
    }
    return fourier_inverse_real(grid, spectrum, 1e-9);
}

double expansion_error(const SampledFunction& f, const KernelSpec& spec, const ExpansionRule& rule,
                       double t, const Grid& grid, double p, const std::optional<WeightSpec>& weight) {
    const GridFunction u = solve(f, spec, t, grid);
    const GridFunction a = build_approximant(f, spec, rule, t, grid);
    GridFunction diff = u;
    for (std::size_t i = 0; i < diff.values.size(); ++i) diff.values[i] -= a.values[i];
    const WeightSpec w = weight ? *weight : WeightSpec::radial(0.0);
    std::optional<DimensionSplit> split;
    if (spec.family != KernelFamily::Heisenberg) split = spec.split;
    else split = DimensionSplit(2 * spec.heis_n, 1);
    return weighted_lp_norm(diff, w, p, split);
}

std::string theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::IntroIsotropic: return "intro-isotropic";
        case TheoremId::Thm2_5: return "thm2_5";
        case TheoremId::Thm3_2: return "thm3_2";
        case TheoremId::Thm1_1: return "thm1_1";
        case TheoremId::Thm1_3: return "thm1_3";
    }
    return "unknown";
}

double ExperimentReport::constant_spread() const {
    double lo = 0.0, hi = 0.0;
    for (double c : bound_constants) {
        if (lo == 0.0 || c < lo) lo = c;
        hi = std::max(hi, c);
    }
    return lo > 0.0 ? hi / lo : 0.0;
}

namespace {

double theorem_rhs_norm(TheoremId id, const SampledFunction& f, int k, double p,
                        const DimensionSplit& split, int heis_n) {
    const int N = f.dim();
    const double R = f.decay_radius();
    const int M = QuadOptions{}.points_for(N);
    Grid g = Grid::cube(N, R, M);
    const GridFunction fg = sample(g, [&](std::span<const double> z) { return f(z); });
    switch (id) {
        case TheoremId::IntroIsotropic:
            return weighted_lp_norm(fg, WeightSpec::radial(k + 1), p);
        case TheoremId::Thm2_5:
            return xp_norm(fg, split, k, p);
        case TheoremId::Thm3_2:
            return weighted_lp_norm(fg, WeightSpec::additive(k + 1, k + 1), 1.0, split);
        case TheoremId::Thm1_1:
            return weighted_lp_norm(fg, WeightSpec::additive(k + 1, 0.5 * (k + 1)), 1.0, split);
        case TheoremId::Thm1_3:
            return weighted_lp_norm(fg, WeightSpec::additive(2.0, 1.0), 1.0,
                                    DimensionSplit(2 * heis_n, 1));
    }
    return 0.0;
}

}  // namespace

ExperimentReport run_theorem(TheoremId id, const SampledFunction& f, int k, double p,
                             const DimensionSplit& split, int heis_n, const RunOptions& opt) {
    const bool heis = id == TheoremId::Thm1_3;
    const int N = f.dim();

    // id-specific preconditions, named after the violated inequality
    if (k < 0) throw std::invalid_argument("run_theorem: k >= 0 required");
    if (p < 1.0) throw std::invalid_argument("run_theorem: p >= 1 required");
    switch (id) {
        case TheoremId::IntroIsotropic:
            if (N >= 2 && p > static_cast<double>(N) / (N - 1))
                throw std::invalid_argument("run_theorem: intro expansion needs p <= N/(N-1)");
            break;
        case TheoremId::Thm2_5: {
            if (!lp_range_ok(p, split.m) || !lp_range_ok(p, split.n))
                throw std::invalid_argument("run_theorem: thm2_5 needs p < min(m/(m-1), n/(n-1))");
            break;
        }
        case TheoremId::Thm3_2:
            if (p != 1.0) throw std::invalid_argument("run_theorem: thm3_2 is stated for p = 1");
            break;
        case TheoremId::Thm1_1:
            if (p != 1.0) throw std::invalid_argument("run_theorem: thm1_1 is stated for p = 1");
            if (k % 2 == 0) throw std::invalid_argument("run_theorem: k must be odd");
            break;
        case TheoremId::Thm1_3:
            if (p != 1.0) throw std::invalid_argument("run_theorem: thm1_3 is stated for p = 1");
            if (heis_n < 1) throw std::invalid_argument("run_theorem: n >= 1 required");
            if (N != 2 * heis_n + 1)
                throw std::invalid_argument("run_theorem: f must live on R^{2n+1}");
            break;
    }

    ExperimentReport report;
    report.id = id;
    report.k = k;
    report.p = p;
    report.t_list = opt.t_list;
    if (report.t_list.empty())
        report.t_list = heis ? std::vector<double>{1, 2, 4, 8, 16}
                             : std::vector<double>{1, 2, 4, 8, 16, 32, 64};
    report.tolerance = opt.tolerance > 0.0 ? opt.tolerance : (heis ? 0.07 : 0.05);

    KernelSpec spec;
    ExpansionRule rule;
    rule.k = k;
    rule.p = p;
    switch (id) {
        case TheoremId::IntroIsotropic:
        case TheoremId::Thm2_5:
            spec = KernelSpec::isotropic(split.m, split.n);
            rule.kind = ExpansionRule::Kind::IsotropicFull;
            report.target_slope = -0.5 * (k + 1);
            break;
        case TheoremId::Thm3_2:
        case TheoremId::Thm1_1:
            spec = KernelSpec::mixed_order(split.m, split.n);
            rule.kind = ExpansionRule::Kind::MixedOrder;
            report.target_slope = -0.25 * (k + 1);
            break;
        case TheoremId::Thm1_3:
            spec = KernelSpec::heisenberg(heis_n);
            rule.kind = ExpansionRule::Kind::HeisenbergFirstOrder;
            report.target_slope = -1.0;
            break;
    }

    std::vector<double> base = opt.base_extents;
    std::vector<int> counts = opt.grid_counts;
    if (base.empty()) {
        base.assign(static_cast<std::size_t>(N), 12.0);
        if (heis) base.back() = 26.0;
    }
    if (counts.empty()) {
        counts.assign(static_cast<std::size_t>(N), heis ? 32 : (N <= 2 ? 256 : 64));
    }
    report.grid_extents = base;
    report.grid_counts = counts;

    report.rhs_norm = theorem_rhs_norm(id, f, k, p, split, heis_n);

    if (heis) {
        // t-independent pieces: kernel table, source samples, moments
        const int n = heis_n;
        const HKernelTable table(n, SigmaQuadrature::make(n));
        std::vector<double> sexts(static_cast<std::size_t>(2 * n), 6.0);
        sexts.push_back(6.0);
        std::vector<int> scounts(static_cast<std::size_t>(2 * n), opt.heis_source_points);
        scounts.push_back(opt.heis_source_theta);
        const HGrid src(Grid(sexts, scounts), n);
        const GridFunction fs = sample(src.grid, [&](std::span<const double> z) { return f(z); });

        for (double t : report.t_list) {
            const Grid out = scaled_grid(spec, base, counts, t);
            const GridFunction u = h_convolve(src, fs, table, t, HGrid(out, n));
            const GridFunction a = build_approximant(f, spec, rule, t, out);
            GridFunction diff = u;
            for (std::size_t i = 0; i < diff.values.size(); ++i) diff.values[i] -= a.values[i];
            report.errors.push_back(weighted_lp_norm(diff, WeightSpec::radial(0.0), 1.0));
        }
    } else {
        for (double t : report.t_list) {
            const Grid g = scaled_grid(spec, base, counts, t);
            report.errors.push_back(expansion_error(f, spec, rule, t, g, p));
        }
    }

    for (std::size_t i = 0; i < report.t_list.size(); ++i)
        report.bound_constants.push_back(report.errors[i] *
                                         std::pow(report.t_list[i], -report.target_slope) /
                                         report.rhs_norm);

    report.fit = decay_fit(report.t_list, report.errors);
    report.pass = report.fit.slope <= report.target_slope + report.tolerance;
    return report;
}

}  // namespace anisoheat
