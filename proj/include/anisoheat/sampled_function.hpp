#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <optional>
#include <span>

#include "anisoheat/gauss_poly.hpp"
#include "anisoheat/grid.hpp"
#include "anisoheat/multi_index.hpp"

namespace anisoheat {

/// A function defined on all of R^N: an evaluator plus a declared decay
/// radius outside of which |f| is negligible. Backed either by an analytic
/// closure (Gaussian-polynomial family, with exact Fourier transform) or by
/// grid data with cubic interpolation and zero extension.
class SampledFunction {
public:
    using Eval = std::function<double(std::span<const double>)>;
    using FourierEval = std::function<std::complex<double>(std::span<const double>)>;

    SampledFunction(int dim, double decay_radius, Eval eval)
        : dim_(dim), radius_(decay_radius), eval_(std::move(eval)) {}

    static SampledFunction from_gauss_poly(const GaussPoly& g);
    static SampledFunction from_grid(const GridFunction& f);

    int dim() const { return dim_; }
    double decay_radius() const { return radius_; }

    double operator()(std::span<const double> z) const { return eval_(z); }

    bool has_fourier() const { return static_cast<bool>(fourier_); }
    std::complex<double> fourier(std::span<const double> xi) const { return fourier_(xi); }

    void set_fourier(FourierEval f) { fourier_ = std::move(f); }

private:
    int dim_;
    double radius_;
    Eval eval_;
    FourierEval fourier_;
};

/// Catmull-Rom cubic interpolation of grid samples, zero outside the box.
double cubic_interpolate(const GridFunction& f, std::span<const double> z);

}  // namespace anisoheat
