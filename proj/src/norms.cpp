#include "anisoheat/norms.hpp"

#include <cmath>
#include <stdexcept>

namespace anisoheat {

WeightSpec WeightSpec::radial(double a) {
    if (a < 0) throw std::invalid_argument("WeightSpec: exponent must be >= 0");
    return {Kind::RadialPower, a, 0.0};
}

WeightSpec WeightSpec::split(double a, double b) {
    if (a < 0 || b < 0) throw std::invalid_argument("WeightSpec: exponents must be >= 0");
    return {Kind::SplitPower, a, b};
}

WeightSpec WeightSpec::additive(double a, double b) {
    if (a < 0 || b < 0) throw std::invalid_argument("WeightSpec: exponents must be >= 0");
    return {Kind::AdditivePower, a, b};
}

namespace {

double block_radius(std::span<const double> z, int begin, int end) {
    double s = 0.0;
    for (int i = begin; i < end; ++i) s += z[static_cast<std::size_t>(i)] * z[static_cast<std::size_t>(i)];
    return std::sqrt(s);
}

double powp(double base, double expo) {
    if (expo == 0.0) return 1.0;
    return std::pow(base, expo);
}

}  // namespace

double WeightSpec::operator()(std::span<const double> z,
                              const std::optional<DimensionSplit>& split) const {
    if (kind == Kind::RadialPower) return powp(block_radius(z, 0, static_cast<int>(z.size())), a);
    if (!split) throw std::invalid_argument("WeightSpec: split weight needs a DimensionSplit");
    const double rx = block_radius(z, 0, split->m);
    const double ry = block_radius(z, split->m, split->dim());
    if (kind == Kind::SplitPower) return powp(rx, a) * powp(ry, b);
    return 1.0 + powp(rx, a) + powp(ry, b);
}

double weighted_lp_norm(const GridFunction& f, const WeightSpec& w, double p,
                        const std::optional<DimensionSplit>& split) {
    if (p < 1.0) throw std::invalid_argument("weighted_lp_norm: p >= 1 required");
    const Grid& g = f.grid;
    std::vector<double> pt(static_cast<std::size_t>(g.dim()));
    double s = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        double v = f.values[i];
        if (!std::isfinite(v)) throw std::domain_error("weighted_lp_norm: non-finite value");
        if (v == 0.0) continue;
        g.node(i, pt.data());
        const double wz = w(pt, split);
        s += std::pow(wz * std::abs(v), p);
    }
    return std::pow(s * g.cell_volume(), 1.0 / p);
}

double mixed_norm_orders(const GridFunction& f, const DimensionSplit& split, int beta_order,
                         int gamma_order, double p) {
    if (p < 1.0) throw std::invalid_argument("mixed_norm: p in [1, inf) required");
    const Grid& g = f.grid;
    if (g.dim() != split.dim()) throw std::invalid_argument("mixed_norm: grid/split dimension mismatch");

    std::size_t nx = 1, ny = 1;
    double hx = 1.0, hy = 1.0;
    for (int a = 0; a < split.m; ++a) {
        nx *= static_cast<std::size_t>(g.count(a));
        hx *= g.spacing(a);
    }
    for (int a = split.m; a < g.dim(); ++a) {
        ny *= static_cast<std::size_t>(g.count(a));
        hy *= g.spacing(a);
    }

    std::vector<double> pt(static_cast<std::size_t>(g.dim()));
    double outer = 0.0;
    for (std::size_t ix = 0; ix < nx; ++ix) {
        // inner integral over the y block (contiguous for x-major layout)
        double inner = 0.0;
        const double* vals = f.values.data() + ix * ny;
        for (std::size_t iy = 0; iy < ny; ++iy) {
            const double v = vals[iy];
            if (!std::isfinite(v)) throw std::domain_error("mixed_norm: non-finite value");
            if (v == 0.0) continue;
            g.node(ix * ny + iy, pt.data());
            const double ry = block_radius(pt, split.m, g.dim());
            inner += powp(ry, gamma_order) * std::abs(v);
        }
        inner *= hy;
        if (inner == 0.0) continue;
        g.node(ix * ny, pt.data());
        const double rx = block_radius(pt, 0, split.m);
        outer += std::pow(powp(rx, beta_order) * inner, p);
    }
    return std::pow(outer * hx, 1.0 / p);
}

double mixed_norm(const GridFunction& f, const DimensionSplit& split, const MultiIndex& beta,
                  const MultiIndex& gamma, double p) {
    if (beta.dim() != split.m || gamma.dim() != split.n)
        throw std::invalid_argument("mixed_norm: index lengths must match the split");
    return mixed_norm_orders(f, split, beta.order(), gamma.order(), p);
}

double xp_norm(const GridFunction& f, const DimensionSplit& split, int k, double p) {
    if (k < 0) throw std::invalid_argument("xp_norm: k >= 0 required");
    double s = 0.0;
    for (int g = 0; g <= k; ++g) s += mixed_norm_orders(f, split, k + 1 - g, g, p);
    return s + weighted_lp_norm(f, WeightSpec::split(0.0, k + 1), p, split);
}

}  // namespace anisoheat
