#include "anisoheat/kernels.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "anisoheat/fft.hpp"
#include "anisoheat/norms.hpp"

namespace anisoheat {

KernelSpec KernelSpec::isotropic(int dim) {
    if (dim < 1) throw std::invalid_argument("KernelSpec: dimension >= 1");
    if (dim == 1) return {KernelFamily::Isotropic, {1, 1}, 0};  // split unused for N = 1 symbols
    return {KernelFamily::Isotropic, {1, dim - 1}, 0};
}

double KernelSpec::axis_scale_exponent(int axis) const {
    switch (family) {
        case KernelFamily::Isotropic:
            return 0.5;
        case KernelFamily::MixedOrder:
            return axis < split.m ? 0.25 : 0.5;
        case KernelFamily::Heisenberg:
            return axis < 2 * heis_n ? 0.5 : 1.0;
    }
    return 0.5;
}

double KernelSpec::prefactor_exponent() const {
    switch (family) {
        case KernelFamily::Isotropic:
            return 0.5 * split.dim();
        case KernelFamily::MixedOrder:
            return 0.25 * split.m + 0.5 * split.n;
        case KernelFamily::Heisenberg:
            return heis_n + 1.0;
    }
    return 0.0;
}

double KernelSpec::symbol(std::span<const double> xi, double t) const {
    if (family == KernelFamily::Heisenberg)
        throw std::invalid_argument("KernelSpec::symbol: no euclidean symbol for the Heisenberg kernel");
    double mu = 0.0;
    if (family == KernelFamily::Isotropic) {
        for (double x : xi) mu += x * x;
    } else {
        double sx = 0.0, sy = 0.0;
        for (int a = 0; a < split.m; ++a) sx += xi[static_cast<std::size_t>(a)] * xi[static_cast<std::size_t>(a)];
        for (int a = split.m; a < split.dim(); ++a) sy += xi[static_cast<std::size_t>(a)] * xi[static_cast<std::size_t>(a)];
        mu = sx * sx + sy;
    }
    return std::exp(-t * mu);
}

GridFunction gaussian_kernel(const Grid& g, double t) {
    if (t <= 0.0) throw std::invalid_argument("gaussian_kernel: t > 0 required");
    const int N = g.dim();
    const double pref = std::pow(4.0 * std::numbers::pi * t, -0.5 * N);
    return sample(g, [&](std::span<const double> z) {
        double r2 = 0.0;
        for (double v : z) r2 += v * v;
        return pref * std::exp(-r2 / (4.0 * t));
    });
}

namespace {

/// inverse FFT of multiplier(xi) * symbol(xi, t)
GridFunction kernel_from_symbol(const KernelSpec& spec, const Grid& g, double t,
                                const MultiIndex* beta, const MultiIndex* gamma) {
    std::vector<std::complex<double>> spec_vals(g.size());
    std::vector<double> xi(static_cast<std::size_t>(g.dim()));
    std::vector<int> idx(static_cast<std::size_t>(g.dim()));
    std::vector<int> dorder(static_cast<std::size_t>(g.dim()), 0);
    if (beta && gamma) {
        if (beta->dim() + gamma->dim() != g.dim())
            throw std::invalid_argument("kernel_derivative: index dimensions must sum to the grid dimension");
        for (int a = 0; a < beta->dim(); ++a) dorder[static_cast<std::size_t>(a)] = (*beta)[a];
        for (int a = 0; a < gamma->dim(); ++a)
            dorder[static_cast<std::size_t>(beta->dim() + a)] = (*gamma)[a];
    }
    for (std::size_t i = 0; i < spec_vals.size(); ++i) {
        g.unflatten(i, idx.data());
        bool odd_nyquist = false;
        for (int a = 0; a < g.dim(); ++a) {
            xi[static_cast<std::size_t>(a)] = dual_frequency(g, a, idx[static_cast<std::size_t>(a)]);
            // the unpaired Nyquist mode breaks conjugate symmetry under odd
            // multipliers; it is zeroed (its symbol weight is ~0 anyway)
            if (dorder[static_cast<std::size_t>(a)] % 2 == 1 && idx[static_cast<std::size_t>(a)] == g.count(a) / 2)
                odd_nyquist = true;
        }
        if (odd_nyquist) {
            spec_vals[i] = 0.0;
            continue;
        }
        std::complex<double> mult = 1.0;
        for (int a = 0; a < g.dim(); ++a) {
            for (int p = 0; p < dorder[static_cast<std::size_t>(a)]; ++p)
                mult *= std::complex<double>(0.0, xi[static_cast<std::size_t>(a)]);
        }
        spec_vals[i] = mult * spec.symbol(xi, t);
    }
    return fourier_inverse_real(g, spec_vals, 1e-10);
}

}  // namespace

GridFunction mixed_kernel(const Grid& g, const DimensionSplit& split, double t) {
    if (t <= 0.0) throw std::invalid_argument("mixed_kernel: t > 0 required");
    if (g.dim() != split.dim()) throw std::invalid_argument("mixed_kernel: grid/split mismatch");
    return kernel_from_symbol(KernelSpec::mixed_order(split.m, split.n), g, t, nullptr, nullptr);
}

GridFunction kernel_derivative(const KernelSpec& spec, const MultiIndex& beta,
                               const MultiIndex& gamma, double t, const Grid& g) {
    if (t <= 0.0) throw std::invalid_argument("kernel_derivative: t > 0 required");
    if (spec.family == KernelFamily::Heisenberg)
        throw std::invalid_argument("kernel_derivative: use the heisenberg kernel derivatives");
    return kernel_from_symbol(spec, g, t, &beta, &gamma);
}

Grid scaled_grid(const KernelSpec& spec, std::span<const double> base_extents,
                 std::span<const int> counts, double t) {
    std::vector<double> ext(base_extents.begin(), base_extents.end());
    for (std::size_t a = 0; a < ext.size(); ++a)
        ext[a] *= std::pow(t, spec.axis_scale_exponent(static_cast<int>(a)));
    return Grid(std::move(ext), std::vector<int>(counts.begin(), counts.end()));
}

DecayFit derivative_decay_check(const KernelSpec& spec, const MultiIndex& beta,
                                const MultiIndex& gamma, double q, std::span<const double> t_list,
                                const DecayCheckOptions& opt) {
    if (t_list.size() < 3) throw std::invalid_argument("derivative_decay_check: need >= 3 samples");
    const int N = spec.dim();
    std::vector<double> base(static_cast<std::size_t>(N), opt.base_extent);
    std::vector<int> counts(static_cast<std::size_t>(N), opt.points);
    std::vector<double> norms;
    norms.reserve(t_list.size());
    for (double t : t_list) {
        const Grid g = scaled_grid(spec, base, counts, t);
        const GridFunction d = kernel_derivative(spec, beta, gamma, t, g);
        norms.push_back(weighted_lp_norm(d, WeightSpec::radial(0.0), q));
    }
    return decay_fit(t_list, norms);
}

}  // namespace anisoheat
