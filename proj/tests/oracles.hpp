// Independent numerical oracles for the test suites: composite Simpson
// quadrature, central differences and brute-force enumerations. These stay
// deliberately separate from the library's trapezoid/Gauss-Legendre paths so
// that expected values are computed through a different route.
#pragma once

#include <cmath>
#include <functional>
#include <vector>

namespace oracle {

/// composite Simpson on [a, b] with n panels (n even)
template <class F>
double simpson(F&& f, double a, double b, int n = 2000) {
    if (n % 2 != 0) ++n;
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

/// tensor Simpson on [-R, R]^2
template <class F>
double simpson2(F&& f, double R, int n = 400) {
    return simpson([&](double x) { return simpson([&](double y) { return f(x, y); }, -R, R, n); },
                   -R, R, n);
}

/// centered first difference
template <class F>
double central_diff(F&& f, double x, double h = 1e-4) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace oracle
