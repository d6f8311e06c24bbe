#include "anisoheat/moments.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "anisoheat/parallel.hpp"
#include "anisoheat/radial_quadrature.hpp"

namespace anisoheat {

double QuadOptions::box_for(const SampledFunction& f) const {
    return box > 0.0 ? box : f.decay_radius();
}

int QuadOptions::points_for(int dim) const {
    if (points > 0) return points;
    switch (dim) {
        case 1: return 512;
        case 2: return 128;
        case 3: return 64;
        default: return 32;
    }
}

namespace {

/// trapezoid over [-R, R)^dim with M nodes per axis, parallel and
/// deterministic
double box_integral(int dim, double R, int M,
                    const std::function<double(std::span<const double>)>& fn) {
    const double h = 2.0 * R / M;
    std::size_t total = 1;
    for (int a = 0; a < dim; ++a) total *= static_cast<std::size_t>(M);
    const double vol = std::pow(h, dim);
    const double s = parallel_sum(total, [&](std::size_t flat) {
        double pt[8];
        for (int a = dim - 1; a >= 0; --a) {
            pt[a] = -R + static_cast<double>(flat % static_cast<std::size_t>(M)) * h;
            flat /= static_cast<std::size_t>(M);
        }
        return fn(std::span<const double>(pt, static_cast<std::size_t>(dim)));
    });
    return s * vol;
}

}  // namespace

double moment(const SampledFunction& f, const MultiIndex& alpha, const QuadOptions& opt) {
    if (alpha.dim() != f.dim()) throw std::invalid_argument("moment: index dimension mismatch");
    const double R = opt.box_for(f);
    const int M = opt.points_for(f.dim());
    return box_integral(f.dim(), R, M, [&](std::span<const double> z) {
        const double v = f(z);
        return v == 0.0 ? 0.0 : v * pow_multi(z, alpha);
    });
}

MomentTable moment_table(const SampledFunction& f, int k, MomentConstraint constraint,
                         const DimensionSplit* split, const QuadOptions& opt) {
    MomentTable table;
    table.max_order = k;
    std::vector<MultiIndex> set;
    if (constraint == MomentConstraint::Full) {
        set = indices_up_to(f.dim(), k);
    } else {
        if (!split) throw std::invalid_argument("moment_table: mixed-order constraint needs a split");
        for (int g = 0; 2 * g <= k; ++g)
            for (const auto& gamma : indices_of_order(split->n, g))
                for (int b = 0; b + 2 * g <= k; ++b)
                    for (const auto& beta : indices_of_order(split->m, b)) {
                        std::vector<int> e = beta.exponents();
                        e.insert(e.end(), gamma.exponents().begin(), gamma.exponents().end());
                        set.emplace_back(std::move(e));
                    }
    }
    for (const auto& a : set) table.values[a.exponents()] = moment(f, a, opt);
    return table;
}

namespace {

/// pull the unit direction and radius out of a block of coordinates
struct Ray {
    double r = 0.0;
    double hat[8];
};

Ray block_ray(std::span<const double> x) {
    Ray ray;
    double r2 = 0.0;
    for (double v : x) r2 += v * v;
    ray.r = std::sqrt(r2);
    for (std::size_t i = 0; i < x.size(); ++i) ray.hat[i] = ray.r > 0.0 ? x[i] / ray.r : 0.0;
    return ray;
}

}  // namespace

SampledFunction remainder_F_alpha(const SampledFunction& f, const MultiIndex& alpha, int k,
                                  int gl_order) {
    if (alpha.dim() != f.dim()) throw std::invalid_argument("remainder_F_alpha: dimension mismatch");
    if (alpha.order() != k + 1) throw std::invalid_argument("remainder_F_alpha: |alpha| = k+1 required");
    const int N = f.dim();
    const double R = f.decay_radius();
    const double pref = (k + 1) * ((k + 1) % 2 == 0 ? 1.0 : -1.0) / alpha.factorial();
    auto gl = std::make_shared<GaussLegendre>(gl_order);
    auto fc = std::make_shared<SampledFunction>(f);
    auto ac = std::make_shared<MultiIndex>(alpha);

    // substituted form along the ray u = |x| / t: smooth integrand on [|x|, R]
    return SampledFunction(N, R, [=](std::span<const double> x) -> double {
        const Ray ray = block_ray(x);
        if (ray.r <= 0.0 || ray.r >= R) return 0.0;
        const double hat_pow = pow_multi(std::span<const double>(ray.hat, x.size()), *ac);
        if (hat_pow == 0.0) return 0.0;
        const double inner = gl->integrate(
            [&](double u) {
                double pt[8];
                for (std::size_t i = 0; i < x.size(); ++i) pt[i] = u * ray.hat[i];
                const double fv = (*fc)(std::span<const double>(pt, x.size()));
                if (fv == 0.0) return 0.0;
                return std::pow(1.0 - ray.r / u, k) * std::pow(u, k + 1 + N - 2) * fv;
            },
            ray.r, R);
        return pref * std::pow(ray.r, 1.0 - N) * hat_pow * inner;
    });
}

SampledFunction remainder_F_gamma(const SampledFunction& f, const DimensionSplit& split,
                                  const MultiIndex& gamma, int k, bool half, int gl_order) {
    if (f.dim() != split.dim()) throw std::invalid_argument("remainder_F_gamma: split mismatch");
    if (gamma.dim() != split.n) throw std::invalid_argument("remainder_F_gamma: gamma must index the y block");
    int expo;       // (1-t) exponent
    double mult;    // leading factor
    if (half) {
        if (k % 2 == 0 || gamma.order() != (k + 1) / 2)
            throw std::invalid_argument("remainder_F_gamma: half rule needs k odd and |gamma| = (k+1)/2");
        expo = (k - 1) / 2;
        mult = 0.5 * (k + 1) * (((k + 1) / 2) % 2 == 0 ? 1.0 : -1.0);
    } else {
        if (gamma.order() != k + 1)
            throw std::invalid_argument("remainder_F_gamma: |gamma| = k+1 required");
        expo = k;
        mult = (k + 1) * ((k + 1) % 2 == 0 ? 1.0 : -1.0);
    }
    const double pref = mult / gamma.factorial();
    const int m = split.m, n = split.n, gord = gamma.order();
    const double R = f.decay_radius();
    auto gl = std::make_shared<GaussLegendre>(gl_order);
    auto fc = std::make_shared<SampledFunction>(f);
    auto gc = std::make_shared<MultiIndex>(gamma);

    return SampledFunction(f.dim(), R, [=](std::span<const double> z) -> double {
        const Ray ray = block_ray(z.subspan(static_cast<std::size_t>(m)));
        if (ray.r <= 0.0 || ray.r >= R) return 0.0;
        const double hat_pow = pow_multi(std::span<const double>(ray.hat, static_cast<std::size_t>(n)), *gc);
        if (hat_pow == 0.0) return 0.0;
        const double inner = gl->integrate(
            [&](double u) {
                double pt[8];
                for (int i = 0; i < m; ++i) pt[i] = z[static_cast<std::size_t>(i)];
                for (int i = 0; i < n; ++i) pt[m + i] = u * ray.hat[i];
                const double fv = (*fc)(std::span<const double>(pt, z.size()));
                if (fv == 0.0) return 0.0;
                return std::pow(1.0 - ray.r / u, expo) * std::pow(u, gord + n - 2) * fv;
            },
            ray.r, R);
        return pref * std::pow(ray.r, 1.0 - n) * hat_pow * inner;
    });
}

SampledFunction y_moment(const SampledFunction& f, const DimensionSplit& split,
                         const MultiIndex& gamma, const QuadOptions& opt) {
    if (f.dim() != split.dim()) throw std::invalid_argument("y_moment: split mismatch");
    if (gamma.dim() != split.n) throw std::invalid_argument("y_moment: gamma must index the y block");
    const double R = opt.box_for(f);
    const int M = opt.points_for(split.n);
    const int m = split.m, n = split.n;
    auto fc = std::make_shared<SampledFunction>(f);
    auto gc = std::make_shared<MultiIndex>(gamma);

    return SampledFunction(m, R, [=](std::span<const double> x) -> double {
        const double h = 2.0 * R / M;
        std::size_t total = 1;
        for (int a = 0; a < n; ++a) total *= static_cast<std::size_t>(M);
        double s = 0.0;
        double pt[8];
        for (int i = 0; i < m; ++i) pt[i] = x[static_cast<std::size_t>(i)];
        for (std::size_t flat = 0; flat < total; ++flat) {
            std::size_t rem = flat;
            for (int a = n - 1; a >= 0; --a) {
                pt[m + a] = -R + static_cast<double>(rem % static_cast<std::size_t>(M)) * h;
                rem /= static_cast<std::size_t>(M);
            }
            const double fv = (*fc)(std::span<const double>(pt, static_cast<std::size_t>(m + n)));
            if (fv != 0.0) s += fv * pow_multi(std::span<const double>(pt + m, static_cast<std::size_t>(n)), *gc);
        }
        return s * std::pow(h, n);
    });
}

SampledFunction remainder_R_betagamma(const SampledFunction& f, const DimensionSplit& split,
                                      const MultiIndex& beta, const MultiIndex& gamma, int k,
                                      RemainderRule rule, const QuadOptions& opt) {
    if (beta.dim() != split.m || gamma.dim() != split.n)
        throw std::invalid_argument("remainder_R_betagamma: index lengths must match the split");
    const int bord = beta.order(), gord = gamma.order();
    if (rule == RemainderRule::Lemma2_3) {
        if (bord + gord != k + 1 || gord > k)
            throw std::invalid_argument("remainder_R_betagamma: need |beta|+|gamma| = k+1, |gamma| <= k");
    } else {
        if (k % 2 == 0 || bord + 2 * gord != k + 1 || 2 * gord > k - 1)
            throw std::invalid_argument(
                "remainder_R_betagamma: need k odd, |beta|+2|gamma| = k+1, |gamma| <= (k-1)/2");
    }
    if (bord < 1) throw std::invalid_argument("remainder_R_betagamma: |beta| >= 1 required");

    const int m = split.m;
    const double R = f.decay_radius();
    const double pref = (bord % 2 == 0 ? 1.0 : -1.0) * bord / beta.factorial();
    auto gl = std::make_shared<GaussLegendre>(opt.gl_order);
    auto ymom = std::make_shared<SampledFunction>(y_moment(f, split, gamma, opt));
    auto bc = std::make_shared<MultiIndex>(beta);

    return SampledFunction(m, R, [=](std::span<const double> x) -> double {
        const Ray ray = block_ray(x);
        if (ray.r <= 0.0 || ray.r >= R) return 0.0;
        const double hat_pow = pow_multi(std::span<const double>(ray.hat, x.size()), *bc);
        if (hat_pow == 0.0) return 0.0;
        const double inner = gl->integrate(
            [&](double u) {
                double pt[8];
                for (std::size_t i = 0; i < x.size(); ++i) pt[i] = u * ray.hat[i];
                const double mv = (*ymom)(std::span<const double>(pt, x.size()));
                if (mv == 0.0) return 0.0;
                return std::pow(1.0 - ray.r / u, bord - 1) * std::pow(u, bord + m - 2) * mv;
            },
            ray.r, R);
        return pref * std::pow(ray.r, 1.0 - m) * hat_pow * inner;
    });
}

double taylor_split_check(const GaussPoly& phi, const DimensionSplit& split,
                          std::span<const double> z, int k, int gl_order) {
    if (phi.dim() != split.dim()) throw std::invalid_argument("taylor_split_check: split mismatch");
    const int N = split.dim(), m = split.m, n = split.n;
    const GaussLegendre gl(gl_order);
    std::vector<double> origin(static_cast<std::size_t>(N), 0.0);

    double rhs = 0.0;
    for (const auto& alpha : indices_up_to(N, k))
        rhs += phi.derivative(alpha).eval(origin) * pow_multi(z, alpha) / alpha.factorial();

    // middle sum: Taylor in x of the y-derivatives at y = 0, remainder order
    // k+1-|gamma| and exponent (1-t)^{k-|gamma|}
    for (int g = 0; g <= k; ++g) {
        for (const auto& gamma : indices_of_order(n, g)) {
            const double ypow = pow_multi(z.subspan(static_cast<std::size_t>(m)), gamma);
            if (ypow == 0.0) continue;
            for (const auto& beta : indices_of_order(m, k + 1 - g)) {
                const double xpow = pow_multi(z.first(static_cast<std::size_t>(m)), beta);
                if (xpow == 0.0) continue;
                std::vector<int> e = beta.exponents();
                e.insert(e.end(), gamma.exponents().begin(), gamma.exponents().end());
                const GaussPoly dphi = phi.derivative(MultiIndex(std::move(e)));
                const double integral = gl.integrate(
                    [&](double t) {
                        std::vector<double> pt(static_cast<std::size_t>(N), 0.0);
                        for (int i = 0; i < m; ++i) pt[static_cast<std::size_t>(i)] = t * z[static_cast<std::size_t>(i)];
                        return std::pow(1.0 - t, k - g) * dphi.eval(pt);
                    },
                    0.0, 1.0);
                rhs += (k + 1 - g) * xpow / beta.factorial() * ypow / gamma.factorial() * integral;
            }
        }
    }

    // last sum: y remainder of order k+1 at x fixed
    for (const auto& gamma : indices_of_order(n, k + 1)) {
        const double ypow = pow_multi(z.subspan(static_cast<std::size_t>(m)), gamma);
        if (ypow == 0.0) continue;
        std::vector<int> e(static_cast<std::size_t>(m), 0);
        e.insert(e.end(), gamma.exponents().begin(), gamma.exponents().end());
        const GaussPoly dphi = phi.derivative(MultiIndex(std::move(e)));
        const double integral = gl.integrate(
            [&](double t) {
                std::vector<double> pt(z.begin(), z.end());
                for (int i = m; i < N; ++i) pt[static_cast<std::size_t>(i)] *= t;
                return std::pow(1.0 - t, k) * dphi.eval(pt);
            },
            0.0, 1.0);
        rhs += (k + 1) * ypow / gamma.factorial() * integral;
    }

    return std::abs(phi.eval(z) - rhs);
}

bool lp_range_ok(double p, int dim) {
    if (p < 1.0) return false;
    if (p == 1.0 || dim == 1) return true;
    return p < static_cast<double>(dim) / (dim - 1.0);
}

namespace {

/// pairing of an x-scaled remainder (|x|^{1-m}-singular, sign jumps at 0)
/// against dphi(x, 0) over R^m
double pair_radial(const SampledFunction& g, const GaussPoly& dphi, int dim, double R,
                   int full_dim) {
    return radial_integral(dim, R, [&](std::span<const double> x) {
        const double gv = g(x);
        if (gv == 0.0) return 0.0;
        double pt[8] = {0, 0, 0, 0, 0, 0, 0, 0};
        for (int i = 0; i < dim; ++i) pt[i] = x[static_cast<std::size_t>(i)];
        return gv * dphi.eval(std::span<const double>(pt, static_cast<std::size_t>(full_dim)));
    });
}

/// pairing of a y-scaled remainder against dphi over R^{m+n}: trapezoid over
/// the smooth x block, radial over the scaled y block
double pair_box_radial(const SampledFunction& g, const GaussPoly& dphi, const DimensionSplit& split,
                       double R, int Mx) {
    const int m = split.m, n = split.n, N = split.dim();
    const double h = 2.0 * R / Mx;
    std::size_t xtotal = 1;
    for (int a = 0; a < m; ++a) xtotal *= static_cast<std::size_t>(Mx);
    const double s = parallel_sum(xtotal, [&](std::size_t flat) {
        double x[8];
        for (int a = m - 1; a >= 0; --a) {
            x[a] = -R + static_cast<double>(flat % static_cast<std::size_t>(Mx)) * h;
            flat /= static_cast<std::size_t>(Mx);
        }
        return radial_integral(n, R, [&](std::span<const double> y) {
            double pt[8];
            for (int i = 0; i < m; ++i) pt[i] = x[i];
            for (int i = 0; i < n; ++i) pt[m + i] = y[static_cast<std::size_t>(i)];
            const std::span<const double> full(pt, static_cast<std::size_t>(N));
            const double gv = g(full);
            return gv == 0.0 ? 0.0 : gv * dphi.eval(full);
        });
    });
    return s * std::pow(h, m);
}

}  // namespace

double verify_decomposition(const SampledFunction& f, const GaussPoly& phi, int k,
                            DecompositionRule rule, const DimensionSplit& split,
                            const QuadOptions& opt) {
    const int N = f.dim();
    if (phi.dim() != N || split.dim() != N)
        throw std::invalid_argument("verify_decomposition: dimension mismatch");
    if (rule == DecompositionRule::Lemma3_3 && k % 2 == 0)
        throw std::invalid_argument("verify_decomposition: Lemma3_3 needs k odd");
    const double R = opt.box_for(f);
    const int M = opt.points_for(N);
    const int m = split.m, n = split.n;
    std::vector<double> origin(static_cast<std::size_t>(N), 0.0);

    const double lhs = box_integral(N, R, M, [&](std::span<const double> z) {
        const double fv = f(z);
        return fv == 0.0 ? 0.0 : fv * phi.eval(z);
    });

    // delta terms: moment / (beta! gamma!) * D^{beta gamma} phi(0)
    double rhs = 0.0;
    std::vector<MultiIndex> main_set;
    if (rule == DecompositionRule::Lemma3_3) {
        for (int g = 0; 2 * g <= k; ++g)
            for (const auto& gamma : indices_of_order(n, g))
                for (int b = 0; b + 2 * g <= k; ++b)
                    for (const auto& beta : indices_of_order(m, b)) {
                        std::vector<int> e = beta.exponents();
                        e.insert(e.end(), gamma.exponents().begin(), gamma.exponents().end());
                        main_set.emplace_back(std::move(e));
                    }
    } else {
        main_set = indices_up_to(N, k);
    }
    for (const auto& a : main_set)
        rhs += moment(f, a, opt) / a.factorial() * phi.derivative(a).eval(origin);

    if (rule == DecompositionRule::Lemma2_1) {
        for (const auto& alpha : indices_of_order(N, k + 1)) {
            const SampledFunction Fa = remainder_F_alpha(f, alpha, k, opt.gl_order);
            const double sign = (k + 1) % 2 == 0 ? 1.0 : -1.0;
            rhs += sign * pair_radial(Fa, phi.derivative(alpha), N, R, N);
        }
        return std::abs(lhs - rhs);
    }

    const bool half = rule == DecompositionRule::Lemma3_3;
    const int gmax = half ? (k - 1) / 2 : k;
    const RemainderRule rrule = half ? RemainderRule::Lemma3_3 : RemainderRule::Lemma2_3;

    // x-scaling remainders paired against (D_x^beta D_y^gamma phi)(x, 0)
    for (int g = 0; g <= gmax; ++g) {
        const int bord = half ? k + 1 - 2 * g : k + 1 - g;
        for (const auto& gamma : indices_of_order(n, g)) {
            for (const auto& beta : indices_of_order(m, bord)) {
                const SampledFunction Rf = remainder_R_betagamma(f, split, beta, gamma, k, rrule, opt);
                std::vector<int> e = beta.exponents();
                e.insert(e.end(), gamma.exponents().begin(), gamma.exponents().end());
                const double sign = bord % 2 == 0 ? 1.0 : -1.0;
                rhs += sign / gamma.factorial() *
                       pair_radial(Rf, phi.derivative(MultiIndex(std::move(e))), m, R, N);
            }
        }
    }

    // y-scaling remainders paired against D_y^gamma phi
    const int glast = half ? (k + 1) / 2 : k + 1;
    for (const auto& gamma : indices_of_order(n, glast)) {
        const SampledFunction Fg = remainder_F_gamma(f, split, gamma, k, half, opt.gl_order);
        std::vector<int> e(static_cast<std::size_t>(m), 0);
        e.insert(e.end(), gamma.exponents().begin(), gamma.exponents().end());
        const double sign = glast % 2 == 0 ? 1.0 : -1.0;
        rhs += sign * pair_box_radial(Fg, phi.derivative(MultiIndex(std::move(e))), split, R,
                                      opt.points_for(m));
    }

    return std::abs(lhs - rhs);
}

}  // namespace anisoheat
