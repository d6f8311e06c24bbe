#pragma once

#include "anisoheat/gauss_poly.hpp"
#include "anisoheat/moments.hpp"
#include "anisoheat/sampled_function.hpp"

namespace anisoheat {

/// F(z, theta) = -int_0^1 (theta/s) f(z, theta/s) ds/s, which collapses to
/// minus the signed theta-tail integral -sgn(theta) int_{|u| >= |theta|,
/// sgn u = sgn theta} f(z, u) du. Satisfies ||F||_1 <= ||theta f||_1 and the
/// pairing -<F, Theta phi> reproduces the theta remainder of the group
/// Taylor identity.
SampledFunction h_remainder_F(const SampledFunction& f, int n, int gl_order = 64);

/// F_{jk}(z) = int_R int_0^1 (1-s) (z_j/s)(z_k/s) f(z/s, theta) ds/s^{2n}
/// dtheta (the proof's form; theta unscaled), j, k in 1..2n. Pass a
/// precomputed theta moment of f to share it across the (j,k) pairs.
SampledFunction h_remainder_Fjk(const SampledFunction& f, int n, int j, int k,
                                const SampledFunction* theta_moment = nullptr, int gl_order = 64,
                                const QuadOptions& opt = {});

/// theta moment x -> integral f(x, theta) dtheta on R^{2n}.
SampledFunction h_theta_moment(const SampledFunction& f, int n, const QuadOptions& opt = {});

/// |<f, phi> - RHS| for the decomposition
///   f = (int f) delta_0 "+" sum_j (int z_j f) Z_j delta_0 + Theta F
///       + sum_{jk} Z_j Z_k (F_jk delta_0(theta)),
/// paired as (int f) phi(0) + sum_j (int z_j f)(Z_j phi)(0)
///         - int F (Theta phi) + sum_{jk} int F_jk(z) (Z_j Z_k phi)(z, 0) dz.
double h_decomposition_check(const SampledFunction& f, const GaussPoly& phi, int n,
                             const QuadOptions& opt = {});

}  // namespace anisoheat
