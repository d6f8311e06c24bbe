#include "anisoheat/heisenberg.hpp"

#include <cmath>
#include <stdexcept>

namespace anisoheat {

HPoint::HPoint(std::vector<double> z_, double theta_) : z(std::move(z_)), theta(theta_) {
    if (z.empty() || z.size() % 2 != 0)
        throw std::invalid_argument("HPoint: z must have even positive length 2n");
    for (double v : z)
        if (!std::isfinite(v)) throw std::invalid_argument("HPoint: non-finite coordinate");
    if (!std::isfinite(theta)) throw std::invalid_argument("HPoint: non-finite coordinate");
}

std::vector<double> HPoint::coords() const {
    std::vector<double> c = z;
    c.push_back(theta);
    return c;
}

HPoint h_compose(const HPoint& v, const HPoint& w) {
    if (v.n() != w.n()) throw std::invalid_argument("h_compose: dimension mismatch");
    const int n = v.n();
    std::vector<double> z(v.z.size());
    for (std::size_t i = 0; i < z.size(); ++i) z[i] = v.z[i] + w.z[i];
    double twist = 0.0;
    for (int j = 0; j < n; ++j)
        twist += v.z[static_cast<std::size_t>(n + j)] * w.z[static_cast<std::size_t>(j)] -
                 v.z[static_cast<std::size_t>(j)] * w.z[static_cast<std::size_t>(n + j)];
    return HPoint(std::move(z), v.theta + w.theta + 2.0 * twist);
}

HPoint h_inverse(const HPoint& v) {
    std::vector<double> z(v.z.size());
    for (std::size_t i = 0; i < z.size(); ++i) z[i] = -v.z[i];
    return HPoint(std::move(z), -v.theta);
}

HPoint h_dilate(double lambda, const HPoint& v) {
    if (lambda <= 0.0) throw std::invalid_argument("h_dilate: lambda > 0 required");
    std::vector<double> z(v.z.size());
    for (std::size_t i = 0; i < z.size(); ++i) z[i] = lambda * v.z[i];
    return HPoint(std::move(z), lambda * lambda * v.theta);
}

HPoint h_scalar(double s, const HPoint& v) {
    std::vector<double> z(v.z.size());
    for (std::size_t i = 0; i < z.size(); ++i) z[i] = s * v.z[i];
    return HPoint(std::move(z), s * v.theta);
}

namespace {

void check_field(int field, int n) {
    if (field != kThetaField && (field < 1 || field > 2 * n))
        throw std::invalid_argument("h_field: field index outside 1..2n");
}

}  // namespace

double h_field_apply(int field, const GaussPoly& u, const HPoint& p) {
    const int n = p.n();
    check_field(field, n);
    if (u.dim() != 2 * n + 1) throw std::invalid_argument("h_field_apply: u must live on R^{2n+1}");
    const auto c = p.coords();
    const int theta_axis = 2 * n;
    if (field == kThetaField) return u.derivative(theta_axis).eval(c);
    const int j = field - 1;  // zero-based axis
    const double du = u.derivative(j).eval(c);
    const double dth = u.derivative(theta_axis).eval(c);
    const double coef = (field <= n) ? 2.0 * p.z[static_cast<std::size_t>(n + j)]
                                     : -2.0 * p.z[static_cast<std::size_t>(j - n)];
    return du + coef * dth;
}

double h_field_apply2(int j, int k, const GaussPoly& u, const HPoint& p) {
    const int n = p.n();
    check_field(j, n);
    check_field(k, n);
    if (j == kThetaField || k == kThetaField)
        throw std::invalid_argument("h_field_apply2: expects Z_j Z_k with j, k in 1..2n");
    const auto c = p.coords();
    const int th = 2 * n;
    const int ja = j - 1, ka = k - 1;
    auto eps = [&](int f) { return f <= n ? 1.0 : -1.0; };
    auto partner = [&](int f) { return f <= n ? (f - 1 + n) : (f - 1 - n); };  // axis of the coefficient coordinate
    const double cj = 2.0 * eps(j) * p.z[static_cast<std::size_t>(partner(j))];
    const double ck = 2.0 * eps(k) * p.z[static_cast<std::size_t>(partner(k))];

    const GaussPoly du_k = u.derivative(ka);
    const GaussPoly du_th = u.derivative(th);
    double r = du_k.derivative(ja).eval(c);               // d_j d_k u
    r += ck * du_th.derivative(ja).eval(c);               // 2 eps_k z_{p(k)} d_j d_th u
    if (ja == partner(k)) r += 2.0 * eps(k) * du_th.eval(c);  // d_j of the coefficient
    r += cj * du_k.derivative(th).eval(c);                // 2 eps_j z_{p(j)} d_th d_k u
    r += cj * ck * du_th.derivative(th).eval(c);          // second theta derivative
    return r;
}

double h_exp_log_check(const HPoint& v) {
    // Log(z, theta) has coordinates (z, theta) in the Jacobian basis and Exp
    // is its inverse, so the round trip is the identity on coordinates.
    const auto c = v.coords();
    HPoint round(std::vector<double>(c.begin(), c.end() - 1), c.back());
    double res = 0.0;
    for (std::size_t i = 0; i < v.z.size(); ++i) res = std::max(res, std::abs(round.z[i] - v.z[i]));
    res = std::max(res, std::abs(round.theta - v.theta));
    // Exp(s Log h) = s h
    for (double s : {0.0, 0.5, 1.0, -1.0, 2.0}) {
        const HPoint sh = h_scalar(s, v);
        for (std::size_t i = 0; i < v.z.size(); ++i)
            res = std::max(res, std::abs(sh.z[i] - s * v.z[i]));
        res = std::max(res, std::abs(sh.theta - s * v.theta));
    }
    return res;
}

double h_taylor_check(const GaussPoly& phi, const HPoint& p, const GaussLegendre& gl) {
    const int n = p.n();
    if (phi.dim() != 2 * n + 1) throw std::invalid_argument("h_taylor_check: phi must live on R^{2n+1}");
    const HPoint origin = HPoint::identity(n);
    const auto c = p.coords();

    double rhs = phi.eval(origin.coords());
    for (int j = 1; j <= 2 * n; ++j)
        rhs += p.z[static_cast<std::size_t>(j - 1)] * h_field_apply(j, phi, origin);

    // int_0^1 (1-s) sum_{j,k} z_j z_k (Z_j Z_k phi)(s z, 0) ds
    rhs += gl.integrate(
        [&](double s) {
            HPoint q = p;
            for (double& v : q.z) v *= s;
            q.theta = 0.0;
            double sum = 0.0;
            for (int j = 1; j <= 2 * n; ++j)
                for (int k = 1; k <= 2 * n; ++k)
                    sum += p.z[static_cast<std::size_t>(j - 1)] * p.z[static_cast<std::size_t>(k - 1)] *
                           h_field_apply2(j, k, phi, q);
            return (1.0 - s) * sum;
        },
        0.0, 1.0);

    // int_0^1 theta (Theta phi)(z, s theta) ds
    rhs += gl.integrate(
        [&](double s) {
            HPoint q = p;
            q.theta = s * p.theta;
            return p.theta * h_field_apply(kThetaField, phi, q);
        },
        0.0, 1.0);

    return std::abs(phi.eval(c) - rhs);
}

}  // namespace anisoheat
