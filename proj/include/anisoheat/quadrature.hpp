#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "anisoheat/grid.hpp"

namespace anisoheat {

/// Tensor trapezoid rule over the periodic cell: sum(values) * prod h_i.
/// Spectrally accurate for smooth integrands that decay below the box edge.
double quad_integral(const GridFunction& f);

/// Gauss-Legendre rule; nodes/weights on (-1, 1).
class GaussLegendre {
public:
    explicit GaussLegendre(int order);

    int order() const { return static_cast<int>(node.size()); }

    /// integral of fn over [a, b]
    template <class F>
    double integrate(F&& fn, double a, double b) const {
        const double c = 0.5 * (a + b), r = 0.5 * (b - a);
        double s = 0.0;
        for (std::size_t i = 0; i < node.size(); ++i) s += weight[i] * fn(c + r * node[i]);
        return r * s;
    }

    std::vector<double> node;
    std::vector<double> weight;
};

}  // namespace anisoheat
