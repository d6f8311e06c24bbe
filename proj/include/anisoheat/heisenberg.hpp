#pragma once

#include <span>
#include <vector>

#include "anisoheat/gauss_poly.hpp"
#include "anisoheat/quadrature.hpp"

namespace anisoheat {

/// Point (z, theta) of the Heisenberg group H^n = (R^{2n+1}, o, delta_lambda),
/// z = (z_1..z_n, z_{n+1}..z_{2n}). Identity is the origin.
struct HPoint {
    std::vector<double> z;
    double theta = 0.0;

    HPoint() = default;
    HPoint(std::vector<double> z_, double theta_);

    int n() const { return static_cast<int>(z.size()) / 2; }
    static HPoint identity(int n) { return HPoint(std::vector<double>(2 * static_cast<std::size_t>(n), 0.0), 0.0); }

    /// coordinates packed as (z_1 .. z_{2n}, theta)
    std::vector<double> coords() const;
};

/// (z,th) o (z',th') = (z+z', th+th'+2 sum_j (z_{n+j} z'_j - z_j z'_{n+j}))
HPoint h_compose(const HPoint& v, const HPoint& w);

/// (z, theta)^{-1} = (-z, -theta)
HPoint h_inverse(const HPoint& v);

/// delta_lambda(z, theta) = (lambda z, lambda^2 theta)
HPoint h_dilate(double lambda, const HPoint& v);

/// Exp(s Log h) = s h: plain scalar multiple of the coordinates of the first
/// kind (not the dilation).
HPoint h_scalar(double s, const HPoint& v);

/// Left-invariant fields: Z_j = d/dz_j + 2 z_{n+j} d/dtheta and
/// Z_{n+j} = d/dz_{n+j} - 2 z_j d/dtheta for j = 1..n; Theta = d/dtheta.
/// `field` is 1..2n for Z_field, or kThetaField for Theta. u lives on
/// R^{2n+1} with theta as the last axis.
inline constexpr int kThetaField = 0;
double h_field_apply(int field, const GaussPoly& u, const HPoint& p);

/// (Z_j Z_k u)(p) expanded through exact partial derivatives.
double h_field_apply2(int j, int k, const GaussPoly& u, const HPoint& p);

/// Round-trip residual of Log then Exp on coordinates plus the
/// Exp(s Log h) = s h specialization at a few s values. Exactly zero on H^n.
double h_exp_log_check(const HPoint& v);

/// Residual of the first-order group Taylor identity
///   phi(z,theta) = phi(0) + sum z_j (Z_j phi)(0)
///                + int_0^1 (1-s) sum z_j z_k (Z_j Z_k phi)(sz, 0) ds
///                + int_0^1 theta (Theta phi)(z, s theta) ds.
double h_taylor_check(const GaussPoly& phi, const HPoint& p, const GaussLegendre& gl);

}  // namespace anisoheat
