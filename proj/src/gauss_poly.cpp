#include "anisoheat/gauss_poly.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace anisoheat {

Polynomial Polynomial::monomial(int degree, double coef) {
    std::vector<double> c(static_cast<std::size_t>(degree) + 1, 0.0);
    c.back() = coef;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::derivative() const {
    if (c_.size() == 1) return Polynomial();
    std::vector<double> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<double>(i);
    return Polynomial(std::move(d));
}

Polynomial Polynomial::times_u() const {
    std::vector<double> d(c_.size() + 1, 0.0);
    for (std::size_t i = 0; i < c_.size(); ++i) d[i + 1] = c_[i];
    return Polynomial(std::move(d));
}

Polynomial Polynomial::shifted(double d) const {
    // Taylor shift: q_i = sum_{j>=i} c_j C(j,i) d^{j-i}
    const int n = degree();
    std::vector<double> q(c_.size(), 0.0);
    for (int j = 0; j <= n; ++j) {
        double binom = 1.0, dp = 1.0;
        for (int i = j; i >= 0; --i) {
            q[static_cast<std::size_t>(i)] += c_[static_cast<std::size_t>(j)] * binom * dp;
            if (i > 0) {
                binom *= static_cast<double>(i) / static_cast<double>(j - i + 1);
                dp *= d;
            }
        }
    }
    return Polynomial(std::move(q));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    std::vector<double> r(c_.size() + o.c_.size() - 1, 0.0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<double> r(std::max(c_.size(), o.c_.size()), 0.0);
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::scaled(double s) const {
    std::vector<double> r = c_;
    for (double& v : r) v *= s;
    return Polynomial(std::move(r));
}

double Polynomial::max_abs_coeff() const {
    double m = 0.0;
    for (double v : c_) m = std::max(m, std::abs(v));
    return m;
}

GaussPoly GaussPoly::gaussian(std::span<const double> widths, std::span<const double> centers,
                              double coef) {
    if (widths.size() != centers.size() || widths.empty())
        throw std::invalid_argument("GaussPoly::gaussian: widths/centers mismatch");
    GaussPoly g(static_cast<int>(widths.size()));
    Term t;
    for (std::size_t i = 0; i < widths.size(); ++i) {
        if (widths[i] <= 0) throw std::invalid_argument("GaussPoly::gaussian: width must be positive");
        t.ax.push_back({widths[i], centers[i], Polynomial::constant(i == 0 ? coef : 1.0)});
    }
    g.terms_.push_back(std::move(t));
    return g;
}

GaussPoly GaussPoly::polynomial(int dim, const MultiIndex& alpha, double coef) {
    if (alpha.dim() != dim) throw std::invalid_argument("GaussPoly::polynomial: dimension mismatch");
    GaussPoly g(dim);
    Term t;
    for (int i = 0; i < dim; ++i)
        t.ax.push_back({0.0, 0.0, Polynomial::monomial(alpha[i], i == 0 ? coef : 1.0)});
    g.terms_.push_back(std::move(t));
    return g;
}

void GaussPoly::add_term(Term t) {
    if (static_cast<int>(t.ax.size()) != dim_)
        throw std::invalid_argument("GaussPoly::add_term: dimension mismatch");
    terms_.push_back(std::move(t));
}

double GaussPoly::eval(std::span<const double> z) const {
    double s = 0.0;
    for (const Term& t : terms_) {
        double prod = 1.0;
        for (int i = 0; i < dim_; ++i) {
            const Axis& ax = t.ax[static_cast<std::size_t>(i)];
            const double u = z[static_cast<std::size_t>(i)] - ax.mu;
            prod *= ax.p.eval(u) * (ax.a > 0.0 ? std::exp(-ax.a * u * u) : 1.0);
            if (prod == 0.0) break;
        }
        s += prod;
    }
    return s;
}

GaussPoly GaussPoly::derivative(int axis) const {
    GaussPoly g(dim_);
    for (const Term& t : terms_) {
        Term d = t;
        Axis& ax = d.ax[static_cast<std::size_t>(axis)];
        // d/du [p e^{-a u^2}] = (p' - 2 a u p) e^{-a u^2}
        ax.p = ax.p.derivative() + ax.p.times_u().scaled(-2.0 * ax.a);
        g.terms_.push_back(std::move(d));
    }
    return g;
}

GaussPoly GaussPoly::derivative(const MultiIndex& alpha) const {
    GaussPoly g = *this;
    for (int i = 0; i < alpha.dim(); ++i)
        for (int j = 0; j < alpha[i]; ++j) g = g.derivative(i);
    return g;
}

GaussPoly GaussPoly::times_poly(int axis, const Polynomial& q) const {
    GaussPoly g(dim_);
    for (const Term& t : terms_) {
        Term d = t;
        Axis& ax = d.ax[static_cast<std::size_t>(axis)];
        // rebase q from z to u = z - mu
        ax.p = ax.p * q.shifted(ax.mu);
        g.terms_.push_back(std::move(d));
    }
    return g;
}

GaussPoly GaussPoly::times_monomial(int axis, int power) const {
    return times_poly(axis, Polynomial::monomial(power));
}

GaussPoly GaussPoly::operator+(const GaussPoly& o) const {
    if (o.dim_ != dim_) throw std::invalid_argument("GaussPoly: dimension mismatch");
    GaussPoly g = *this;
    g.terms_.insert(g.terms_.end(), o.terms_.begin(), o.terms_.end());
    return g;
}

GaussPoly GaussPoly::scaled(double s) const {
    GaussPoly g = *this;
    for (Term& t : g.terms_) t.ax[0].p = t.ax[0].p.scaled(s);
    return g;
}

namespace {

/// integral of u^j e^{-a u^2} du over R
double gauss_moment_1d(int j, double a) {
    if (j % 2 == 1) return 0.0;
    double v = std::sqrt(std::numbers::pi / a);
    for (int i = 2; i <= j; i += 2) v *= (i - 1) / (2.0 * a);
    return v;
}

}  // namespace

double GaussPoly::integral() const {
    double s = 0.0;
    for (const Term& t : terms_) {
        double prod = 1.0;
        for (const Axis& ax : t.ax) {
            if (ax.a <= 0.0) throw std::domain_error("GaussPoly::integral: non-decaying axis");
            double axint = 0.0;
            const auto& c = ax.p.coeffs();
            for (std::size_t j = 0; j < c.size(); ++j)
                if (c[j] != 0.0) axint += c[j] * gauss_moment_1d(static_cast<int>(j), ax.a);
            prod *= axint;
        }
        s += prod;
    }
    return s;
}

double GaussPoly::moment(const MultiIndex& alpha) const {
    GaussPoly g = *this;
    for (int i = 0; i < alpha.dim(); ++i)
        if (alpha[i] > 0) g = g.times_monomial(i, alpha[i]);
    return g.integral();
}

std::complex<double> GaussPoly::fourier(std::span<const double> xi) const {
    using cd = std::complex<double>;
    cd s = 0.0;
    for (const Term& t : terms_) {
        cd prod = 1.0;
        for (int i = 0; i < dim_; ++i) {
            const Axis& ax = t.ax[static_cast<std::size_t>(i)];
            if (ax.a <= 0.0) throw std::domain_error("GaussPoly::fourier: non-decaying axis");
            const double x = xi[static_cast<std::size_t>(i)];
            // g_j = integral u^j e^{-a u^2 - i u xi} du satisfies
            //   g_j = ((j-1) g_{j-2} - i xi g_{j-1}) / (2a)
            const cd g0 = std::sqrt(std::numbers::pi / ax.a) * std::exp(-x * x / (4.0 * ax.a));
            cd gm2 = 0.0, gm1 = g0, axhat = 0.0;
            const auto& c = ax.p.coeffs();
            for (std::size_t j = 0; j < c.size(); ++j) {
                cd gj;
                if (j == 0) {
                    gj = g0;
                } else {
                    gj = (static_cast<double>(j - 1) * gm2 - cd(0.0, x) * gm1) / (2.0 * ax.a);
                    gm2 = gm1;
                    gm1 = gj;
                }
                axhat += c[j] * gj;
            }
            prod *= axhat * std::exp(cd(0.0, -ax.mu * x));
        }
        s += prod;
    }
    return s;
}

double GaussPoly::decay_radius(int extra_degree) const {
    double r_all = 1.0;
    for (const Term& t : terms_) {
        for (const Axis& ax : t.ax) {
            if (ax.a <= 0.0) throw std::domain_error("GaussPoly::decay_radius: non-decaying axis");
            const int deg = ax.p.degree() + extra_degree;
            const double scale = std::max(1.0, ax.p.max_abs_coeff());
            // solve a r^2 = 46 + log-scale + deg log(1+r) by fixed point
            double r = std::sqrt(46.0 / ax.a);
            for (int it = 0; it < 40; ++it)
                r = std::sqrt((46.0 + std::log(scale + 1.0) + deg * std::log1p(r)) / ax.a);
            r_all = std::max(r_all, std::abs(ax.mu) + r);
        }
    }
    return r_all * std::sqrt(static_cast<double>(dim_));
}

std::uint64_t GaussPolySampler::next() {
    // splitmix64
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

double GaussPolySampler::uniform(double lo, double hi) {
    const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

int GaussPolySampler::uniform_int(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

GaussPoly GaussPolySampler::sample(int dim, int max_degree, double max_shift) {
    GaussPoly g(dim);
    const int nterms = uniform_int(1, 2);
    for (int t = 0; t < nterms; ++t) {
        GaussPoly::Term term;
        for (int i = 0; i < dim; ++i) {
            GaussPoly::Axis ax;
            ax.a = uniform(0.6, 1.6);
            ax.mu = uniform(-max_shift, max_shift);
            std::vector<double> c(static_cast<std::size_t>(uniform_int(0, max_degree)) + 1);
            for (double& v : c) v = uniform(-1.0, 1.0);
            if (c.size() == 1 && std::abs(c[0]) < 0.1) c[0] = 0.5;  // avoid near-zero instances
            ax.p = Polynomial(std::move(c));
            term.ax.push_back(std::move(ax));
        }
        g.add_term(std::move(term));
    }
    return g;
}

}  // namespace anisoheat
