#include "anisoheat/radial_quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "anisoheat/quadrature.hpp"

namespace anisoheat {

double radial_integral(int d, double R,
                       const std::function<double(std::span<const double>)>& fn, int nr,
                       int nang) {
    if (R <= 0.0) throw std::invalid_argument("radial_integral: R > 0 required");
    const GaussLegendre gl(nr);
    const double smax = std::sqrt(R);

    if (d == 1) {
        double out = 0.0;
        for (double sign : {-1.0, 1.0}) {
            out += gl.integrate(
                [&](double s) {
                    const double r = s * s;
                    const double w = sign * r;
                    return fn(std::span<const double>(&w, 1)) * 2.0 * s;
                },
                0.0, smax);
        }
        return out;
    }

    if (d == 2) {
        const double dth = 2.0 * std::numbers::pi / nang;
        double out = 0.0;
        for (int it = 0; it < nang; ++it) {
            const double c = std::cos(it * dth), sn = std::sin(it * dth);
            out += gl.integrate(
                [&](double s) {
                    const double r = s * s;
                    const double w[2] = {r * c, r * sn};
                    return fn(std::span<const double>(w, 2)) * 2.0 * s * s * s;  // r dr = 2 s^3 ds
                },
                0.0, smax);
        }
        return out * dth;
    }

    if (d == 3) {
        const GaussLegendre glmu(nr);
        const double dth = 2.0 * std::numbers::pi / nang;
        double out = 0.0;
        for (int it = 0; it < nang; ++it) {
            const double c = std::cos(it * dth), sn = std::sin(it * dth);
            out += glmu.integrate(
                [&](double mu) {
                    const double rho = std::sqrt(std::max(0.0, 1.0 - mu * mu));
                    return gl.integrate(
                        [&](double s) {
                            const double r = s * s;
                            const double w[3] = {r * rho * c, r * rho * sn, r * mu};
                            // r^2 dr = 2 s^5 ds
                            return fn(std::span<const double>(w, 3)) * 2.0 * std::pow(s, 5);
                        },
                        0.0, smax);
                },
                -1.0, 1.0);
        }
        return out * dth;
    }

    throw std::invalid_argument("radial_integral: d <= 3 supported");
}

}  // namespace anisoheat
