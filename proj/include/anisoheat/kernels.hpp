#pragma once

#include <span>
#include <vector>

#include "anisoheat/fit.hpp"
#include "anisoheat/grid.hpp"
#include "anisoheat/multi_index.hpp"

namespace anisoheat {

enum class KernelFamily { Isotropic, MixedOrder, Heisenberg };

/// Which fundamental solution, plus the dimension bookkeeping that fixes the
/// anisotropic scaling exponents per axis (x: 1/4 for mixed order, 1/2
/// otherwise; Heisenberg z: 1/2, theta: 1).
struct KernelSpec {
    KernelFamily family = KernelFamily::Isotropic;
    DimensionSplit split{1, 1};  // isotropic / mixed order
    int heis_n = 1;              // heisenberg

    static KernelSpec isotropic(int m, int n) { return {KernelFamily::Isotropic, {m, n}, 0}; }
    static KernelSpec isotropic(int dim);
    static KernelSpec mixed_order(int m, int n) { return {KernelFamily::MixedOrder, {m, n}, 0}; }
    static KernelSpec heisenberg(int n) { return {KernelFamily::Heisenberg, {1, 1}, n}; }

    int dim() const {
        return family == KernelFamily::Heisenberg ? 2 * heis_n + 1 : split.dim();
    }

    /// exponent a with grid extent growing like t^a on the given axis
    double axis_scale_exponent(int axis) const;

    /// exponent of the kernel prefactor t^{-e}: m/4 + n/2 (mixed), N/2
    /// (isotropic), n+1 (heisenberg)
    double prefactor_exponent() const;

    /// Fourier symbol of the semigroup at time t (FFT families only)
    double symbol(std::span<const double> xi, double t) const;
};

/// (4 pi t)^{-N/2} e^{-|z|^2 / 4t}, sampled directly.
GridFunction gaussian_kernel(const Grid& g, double t);

/// Kernel with symbol e^{-t(|xi|^4 + |eta|^2)} via inverse FFT on the dual
/// grid. The imaginary residue of the transform is checked and discarded.
GridFunction mixed_kernel(const Grid& g, const DimensionSplit& split, double t);

/// D_x^beta D_y^gamma of the isotropic / mixed-order kernel as a Fourier
/// multiplier (i xi)^beta (i eta)^gamma. Exact to quadrature accuracy.
GridFunction kernel_derivative(const KernelSpec& spec, const MultiIndex& beta,
                               const MultiIndex& gamma, double t, const Grid& g);

struct DecayCheckOptions {
    double base_extent = 12.0;  // per-axis extent at t = 1
    int points = 128;           // per-axis count
};

/// Fits the slope of log ||D_x^beta D_y^gamma G_t||_{L^q} against log t on
/// self-similarly scaled grids; at q = 1 the expected slope is
/// -|beta|/4 - |gamma|/2 (mixed order) resp. -(|beta|+|gamma|)/2 (isotropic).
DecayFit derivative_decay_check(const KernelSpec& spec, const MultiIndex& beta,
                                const MultiIndex& gamma, double q, std::span<const double> t_list,
                                const DecayCheckOptions& opt = {});

/// Self-similarly scaled grid for the spec at time t: extent_i = base_i * t^{a_i}.
Grid scaled_grid(const KernelSpec& spec, std::span<const double> base_extents,
                 std::span<const int> counts, double t);

}  // namespace anisoheat
