#include "anisoheat/sampled_function.hpp"

#include <cmath>
#include <vector>

namespace anisoheat {

SampledFunction SampledFunction::from_gauss_poly(const GaussPoly& g) {
    auto shared = std::make_shared<GaussPoly>(g);
    SampledFunction f(g.dim(), shared->decay_radius(),
                      [shared](std::span<const double> z) { return shared->eval(z); });
    f.set_fourier([shared](std::span<const double> xi) { return shared->fourier(xi); });
    return f;
}

namespace {

/// weights of the 4-point Catmull-Rom stencil at fractional offset s in [0,1]
void catmull_rom_weights(double s, double w[4]) {
    const double s2 = s * s, s3 = s2 * s;
    w[0] = 0.5 * (-s3 + 2.0 * s2 - s);
    w[1] = 0.5 * (3.0 * s3 - 5.0 * s2 + 2.0);
    w[2] = 0.5 * (-3.0 * s3 + 4.0 * s2 + s);
    w[3] = 0.5 * (s3 - s2);
}

double interp_recursive(const GridFunction& f, std::span<const double> z, int axis,
                        std::size_t offset) {
    const Grid& g = f.grid;
    const double x = z[static_cast<std::size_t>(axis)];
    const double t = (x + g.extent(axis)) / g.spacing(axis);
    const int i0 = static_cast<int>(std::floor(t));
    double w[4];
    catmull_rom_weights(t - i0, w);
    double s = 0.0;
    for (int d = -1; d <= 2; ++d) {
        const int idx = i0 + d;
        if (idx < 0 || idx >= g.count(axis)) continue;  // zero extension
        const std::size_t off = offset + g.stride(axis) * static_cast<std::size_t>(idx);
        const double v = (axis + 1 == g.dim()) ? f.values[off] : interp_recursive(f, z, axis + 1, off);
        s += w[d + 1] * v;
    }
    return s;
}

}  // namespace

double cubic_interpolate(const GridFunction& f, std::span<const double> z) {
    const Grid& g = f.grid;
    for (int a = 0; a < g.dim(); ++a) {
        const double x = z[static_cast<std::size_t>(a)];
        if (x < -g.extent(a) || x >= g.extent(a)) return 0.0;
    }
    return interp_recursive(f, z, 0, 0);
}

SampledFunction SampledFunction::from_grid(const GridFunction& f) {
    auto shared = std::make_shared<GridFunction>(f);
    double radius = 0.0;
    for (int a = 0; a < f.grid.dim(); ++a) radius += f.grid.extent(a) * f.grid.extent(a);
    return SampledFunction(f.grid.dim(), std::sqrt(radius),
                           [shared](std::span<const double> z) { return cubic_interpolate(*shared, z); });
}

}  // namespace anisoheat
