#include "anisoheat/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace anisoheat {

double quad_integral(const GridFunction& f) {
    double s = 0.0;
    for (double v : f.values) {
        if (!std::isfinite(v)) throw std::domain_error("quad_integral: non-finite value");
        s += v;
    }
    return s * f.grid.cell_volume();
}

GaussLegendre::GaussLegendre(int order) {
    if (order < 1) throw std::invalid_argument("GaussLegendre: order >= 1 required");
    node.resize(static_cast<std::size_t>(order));
    weight.resize(static_cast<std::size_t>(order));
    const int n = order;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Newton iteration on P_n from the Chebyshev-based initial guess.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        node[static_cast<std::size_t>(i)] = -x;
        node[static_cast<std::size_t>(n - 1 - i)] = x;
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        weight[static_cast<std::size_t>(i)] = w;
        weight[static_cast<std::size_t>(n - 1 - i)] = w;
    }
}

}  // namespace anisoheat
