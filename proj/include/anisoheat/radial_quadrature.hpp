#pragma once

#include <functional>
#include <span>

namespace anisoheat {

/// integral over the ball |w| <= R in R^d of fn(w), by polar quadrature with
/// the substitution r = s^2. The volume Jacobian r^{d-1} dr absorbs radial
/// singularities up to |w|^{1-d} (the scaling remainders) and the
/// substitution keeps |w|^{-1/2}-type profiles smooth; sign jumps across the
/// origin never cross a quadrature panel. d <= 3.
double radial_integral(int d, double R,
                       const std::function<double(std::span<const double>)>& fn, int nr = 64,
                       int nang = 96);

}  // namespace anisoheat
