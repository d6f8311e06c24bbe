#pragma once

#include <span>
#include <vector>

#include "anisoheat/grid.hpp"

namespace anisoheat {

/// Trapezoid rule for the sigma integral of the Gaveau representation. The
/// integrand decays like e^{-2 n |sigma|}, so the default truncation S = 20
/// puts the tail below 1e-12 for every n >= 1.
struct SigmaQuadrature {
    std::vector<double> node;
    std::vector<double> weight;
    double S = 0.0;

    /// panels >= 64; S < 0 picks the default max(20, 20/n)
    static SigmaQuadrature make(int n, int panels = 256, double S = -1.0);
};

/// Heisenberg heat kernel via the explicit sigma integral
///   H(z,theta) = (4 pi)^{-(n+1)} int (2s/sinh 2s)^n
///                exp(i s theta / 2 - (|z|^2/2)(s / tanh 2s)) ds,
/// with H_t(z,theta) = t^{-(n+1)} H(z/sqrt t, theta/t). The removable
/// singularity at sigma = 0 uses the limits 1 and 1/2.
class HeisenbergKernel {
public:
    enum class Deriv { Zj, Theta, ZjZk };

    HeisenbergKernel(int n, SigmaQuadrature quad);
    explicit HeisenbergKernel(int n) : HeisenbergKernel(n, SigmaQuadrature::make(n)) {}

    int n() const { return n_; }

    double value(std::span<const double> z, double theta) const;
    double value_t(std::span<const double> z, double theta, double t) const;

    /// Z_j H_t, Theta H_t or Z_j Z_k H_t evaluated analytically under the
    /// sigma integral (j, k in 1..2n; ignored for Theta).
    double derivative(Deriv kind, int j, int k, std::span<const double> z, double theta,
                      double t) const;

private:
    struct Sums;
    Sums integrate(std::span<const double> z, double theta, double t, int order) const;

    int n_;
    SigmaQuadrature quad_;
    std::vector<double> wn_;  // weight * (2s/sinh 2s)^n per node
    std::vector<double> c_;   // s / tanh 2s per node
};

/// Point evaluations matching the kernel operations one to one.
double heisenberg_kernel(std::span<const double> z, double theta, const SigmaQuadrature& quad);
double heisenberg_kernel_t(std::span<const double> z, double theta, double t,
                           const SigmaQuadrature& quad);
double heisenberg_kernel_derivative(HeisenbergKernel::Deriv kind, int j, int k,
                                    std::span<const double> z, double theta, double t,
                                    const SigmaQuadrature& quad);

/// H depends on z only through |z|^2: a bicubic table of
/// Psi(s, theta) = H(z, theta), s = |z|^2, serves every kernel lookup in the
/// group convolution. Outside the tabulated box the kernel is below the decay
/// threshold by construction (verified at build), and lookups return 0.
class HKernelTable {
public:
    struct Options {
        double s_max = 200.0;
        double theta_max = 44.0;
        double ds = 0.1;
        double dtheta = 0.1;
        double decay_check = 1e-12;  // boundary values must be below this * peak
    };

    HKernelTable(int n, const SigmaQuadrature& quad);  // default options
    HKernelTable(int n, const SigmaQuadrature& quad, const Options& opt);

    int n() const { return n_; }
    double peak() const { return peak_; }

    /// Psi(|z|^2, theta); zero outside the box
    double psi(double s, double theta) const;

    /// H_t(z, theta) through the table
    double value_t(std::span<const double> z, double theta, double t) const;

    /// Precontracted s-stencil for repeated lookups at fixed |z|^2.
    struct SRow {
        const double* rows[4] = {nullptr, nullptr, nullptr, nullptr};
        double ws[4] = {0, 0, 0, 0};
        bool valid = false;
    };
    SRow s_stencil(double s) const;
    double psi_theta(const SRow& r, double theta) const;

private:
    int n_;
    Options opt_;
    int ns_, ntheta_;
    double peak_ = 0.0;
    std::vector<double> table_;  // row major: s index major, theta contiguous
};

}  // namespace anisoheat
