#pragma once

#include <optional>
#include <span>

#include "anisoheat/grid.hpp"
#include "anisoheat/multi_index.hpp"

namespace anisoheat {

/// Polynomial weights used by the error estimates:
///   RadialPower   |z|^a
///   SplitPower    |x|^a |y|^b
///   AdditivePower 1 + |x|^a + |y|^b
/// Split kinds need a DimensionSplit at evaluation time.
struct WeightSpec {
    enum class Kind { RadialPower, SplitPower, AdditivePower };

    Kind kind = Kind::RadialPower;
    double a = 0.0;
    double b = 0.0;

    static WeightSpec radial(double a);
    static WeightSpec split(double a, double b);
    static WeightSpec additive(double a, double b);

    double operator()(std::span<const double> z, const std::optional<DimensionSplit>& split) const;
};

/// ( integral w(z)^p |f(z)|^p dz )^{1/p}
double weighted_lp_norm(const GridFunction& f, const WeightSpec& w, double p,
                        const std::optional<DimensionSplit>& split = std::nullopt);

/// || f ||_{L^p(R^m, |x|^{|beta|}; L^1(R^n, |y|^{|gamma|}))}: outer L^p over x
/// of |x|^{|beta|} times the |y|^{|gamma|}-weighted L^1 norm over y.
double mixed_norm(const GridFunction& f, const DimensionSplit& split, const MultiIndex& beta,
                  const MultiIndex& gamma, double p);

/// Same norm indexed by the scalar orders |beta|, |gamma| only.
double mixed_norm_orders(const GridFunction& f, const DimensionSplit& split, int beta_order,
                         int gamma_order, double p);

/// X^p norm: sum over levels g = 0..k of the mixed norm with |x|^{k+1-g},
/// |y|^g weights, plus the |y|^{k+1}-weighted L^p norm.
double xp_norm(const GridFunction& f, const DimensionSplit& split, int k, double p);

}  // namespace anisoheat
