#include "anisoheat/heisenberg_decomposition.hpp"

#include <cmath>
#include <stdexcept>

#include "anisoheat/heisenberg.hpp"
#include "anisoheat/parallel.hpp"
#include "anisoheat/radial_quadrature.hpp"

namespace anisoheat {

SampledFunction h_remainder_F(const SampledFunction& f, int n, int gl_order) {
    if (f.dim() != 2 * n + 1) throw std::invalid_argument("h_remainder_F: f must live on R^{2n+1}");
    const double R = f.decay_radius();
    auto gl = std::make_shared<GaussLegendre>(gl_order);
    auto fc = std::make_shared<SampledFunction>(f);
    const int zdim = 2 * n;

    return SampledFunction(f.dim(), R, [=](std::span<const double> w) -> double {
        const double theta = w[static_cast<std::size_t>(zdim)];
        if (theta == 0.0 || std::abs(theta) >= R) return 0.0;
        const double sgn = theta > 0.0 ? 1.0 : -1.0;
        const double tail = gl->integrate(
            [&](double u) {
                double pt[8];
                for (int i = 0; i < zdim; ++i) pt[i] = w[static_cast<std::size_t>(i)];
                pt[zdim] = sgn * u;
                return (*fc)(std::span<const double>(pt, w.size()));
            },
            std::abs(theta), R);
        return -sgn * tail;
    });
}

SampledFunction h_theta_moment(const SampledFunction& f, int n, const QuadOptions& opt) {
    if (f.dim() != 2 * n + 1) throw std::invalid_argument("h_theta_moment: f must live on R^{2n+1}");
    DimensionSplit split(2 * n, 1);
    return y_moment(f, split, MultiIndex::zero(1), opt);
}

SampledFunction h_remainder_Fjk(const SampledFunction& f, int n, int j, int k,
                                const SampledFunction* theta_moment, int gl_order,
                                const QuadOptions& opt) {
    if (f.dim() != 2 * n + 1) throw std::invalid_argument("h_remainder_Fjk: f must live on R^{2n+1}");
    if (j < 1 || j > 2 * n || k < 1 || k > 2 * n)
        throw std::invalid_argument("h_remainder_Fjk: j, k in 1..2n required");
    const double R = f.decay_radius();
    auto gl = std::make_shared<GaussLegendre>(gl_order);
    auto mom = std::make_shared<SampledFunction>(theta_moment ? *theta_moment
                                                              : h_theta_moment(f, n, opt));
    const int zdim = 2 * n;
    const int ja = j - 1, ka = k - 1;

    // ray substitution u = |z| / s: F_jk(z) = zhat_j zhat_k |z|^{1-2n}
    //   int_{|z|}^R (1 - |z|/u) u^{2n} g(u zhat) du, g the theta moment
    return SampledFunction(zdim, R, [=](std::span<const double> z) -> double {
        double r2 = 0.0;
        for (double v : z) r2 += v * v;
        const double r = std::sqrt(r2);
        if (r <= 0.0 || r >= R) return 0.0;
        const double hj = z[static_cast<std::size_t>(ja)] / r, hk = z[static_cast<std::size_t>(ka)] / r;
        if (hj == 0.0 || hk == 0.0) return 0.0;
        const double inner = gl->integrate(
            [&](double u) {
                double pt[8];
                for (int i = 0; i < zdim; ++i) pt[i] = u * z[static_cast<std::size_t>(i)] / r;
                const double gv = (*mom)(std::span<const double>(pt, static_cast<std::size_t>(zdim)));
                if (gv == 0.0) return 0.0;
                return (1.0 - r / u) * std::pow(u, zdim) * gv;
            },
            r, R);
        return hj * hk * std::pow(r, 1.0 - zdim) * inner;
    });
}

double h_decomposition_check(const SampledFunction& f, const GaussPoly& phi, int n,
                             const QuadOptions& opt) {
    const int N = 2 * n + 1;
    if (f.dim() != N || phi.dim() != N)
        throw std::invalid_argument("h_decomposition_check: dimension mismatch");
    const double R = opt.box_for(f);
    const int M = opt.points_for(N);
    const HPoint origin = HPoint::identity(n);

    // <f, phi>
    const double h = 2.0 * R / M;
    std::size_t total = 1;
    for (int a = 0; a < N; ++a) total *= static_cast<std::size_t>(M);
    auto boxsum = [&](const std::function<double(std::span<const double>)>& fn) {
        return std::pow(h, N) * parallel_sum(total, [&](std::size_t flat) {
            double pt[8];
            for (int a = N - 1; a >= 0; --a) {
                pt[a] = -R + static_cast<double>(flat % static_cast<std::size_t>(M)) * h;
                flat /= static_cast<std::size_t>(M);
            }
            return fn(std::span<const double>(pt, static_cast<std::size_t>(N)));
        });
    };

    const double lhs = boxsum([&](std::span<const double> w) {
        const double fv = f(w);
        return fv == 0.0 ? 0.0 : fv * phi.eval(w);
    });

    double rhs = moment(f, MultiIndex::zero(N), opt) * phi.eval(origin.coords());
    for (int j = 1; j <= 2 * n; ++j)
        rhs += moment(f, MultiIndex::unit(N, j - 1), opt) * h_field_apply(j, phi, origin);

    // -<F, Theta phi>: F jumps across theta = 0, so the theta integral runs
    // as a split Gauss-Legendre rule under the smooth z box sum
    const SampledFunction F = h_remainder_F(f, n, opt.gl_order);
    const GaussPoly dtheta_phi = phi.derivative(N - 1);
    {
        const int Mz = opt.points_for(2 * n);
        const double hz = 2.0 * R / Mz;
        std::size_t ztotal = 1;
        for (int a = 0; a < 2 * n; ++a) ztotal *= static_cast<std::size_t>(Mz);
        rhs -= std::pow(hz, 2 * n) * parallel_sum(ztotal, [&](std::size_t flat) {
            double pt[8];
            for (int a = 2 * n - 1; a >= 0; --a) {
                pt[a] = -R + static_cast<double>(flat % static_cast<std::size_t>(Mz)) * hz;
                flat /= static_cast<std::size_t>(Mz);
            }
            return radial_integral(1, R, [&](std::span<const double> th) {
                pt[2 * n] = th[0];
                const std::span<const double> w(pt, static_cast<std::size_t>(N));
                const double fv = F(w);
                return fv == 0.0 ? 0.0 : fv * dtheta_phi.eval(w);
            });
        });
    }

    // sum_jk int F_jk(z) (Z_j Z_k phi)(z, 0) dz: F_jk carries the
    // |z|^{1-2n} scaling singularity, handled by the polar rule
    QuadOptions mopt = opt;  // the inner theta moment runs per F_jk call
    if (opt.points == 0) mopt.points = 64;
    const SampledFunction tmom = h_theta_moment(f, n, mopt);
    for (int j = 1; j <= 2 * n; ++j) {
        for (int k = 1; k <= 2 * n; ++k) {
            const SampledFunction Fjk = h_remainder_Fjk(f, n, j, k, &tmom, opt.gl_order, opt);
            rhs += radial_integral(2 * n, R, [&](std::span<const double> z) {
                const double fv = Fjk(z);
                if (fv == 0.0) return 0.0;
                HPoint p(std::vector<double>(z.begin(), z.end()), 0.0);
                return fv * h_field_apply2(j, k, phi, p);
            });
        }
    }

    return std::abs(lhs - rhs);
}

}  // namespace anisoheat
