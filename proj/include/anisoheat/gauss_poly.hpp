#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "anisoheat/multi_index.hpp"

namespace anisoheat {

/// Dense real polynomial in one variable, coefficient order c[0] + c[1] u + ...
class Polynomial {
public:
    Polynomial() : c_{0.0} {}
    explicit Polynomial(std::vector<double> c) : c_(std::move(c)) {
        if (c_.empty()) c_.push_back(0.0);
    }
    static Polynomial constant(double v) { return Polynomial({v}); }
    static Polynomial monomial(int degree, double coef = 1.0);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<double>& coeffs() const { return c_; }

    double eval(double u) const {
        double r = 0.0;
        for (std::size_t i = c_.size(); i-- > 0;) r = r * u + c_[i];
        return r;
    }

    Polynomial derivative() const;
    Polynomial times_u() const;           // u * p(u)
    Polynomial shifted(double d) const;   // q(u) = p(u + d)
    Polynomial operator*(const Polynomial&) const;
    Polynomial operator+(const Polynomial&) const;
    Polynomial scaled(double s) const;

    double max_abs_coeff() const;

private:
    std::vector<double> c_;
};

/// Separable Gaussian-polynomial functions on R^d:
///   f(z) = sum_terms prod_axes p_i(u_i) exp(-a_i u_i^2),  u_i = z_i - mu_i.
/// Closed under differentiation and polynomial multiplication, with exact
/// integrals, moments and Fourier transform. This is the test-function family
/// behind all identity and bound checks.
class GaussPoly {
public:
    struct Axis {
        double a = 1.0;   // width; a >= 0, a == 0 means a pure polynomial factor
        double mu = 0.0;  // center
        Polynomial p;     // polynomial in u = z - mu
    };
    struct Term {
        std::vector<Axis> ax;
    };

    explicit GaussPoly(int dim) : dim_(dim) {}

    static GaussPoly gaussian(std::span<const double> widths, std::span<const double> centers,
                              double coef = 1.0);
    /// coef * z^alpha (no Gaussian factor; eval/derivative only)
    static GaussPoly polynomial(int dim, const MultiIndex& alpha, double coef = 1.0);

    int dim() const { return dim_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    double eval(std::span<const double> z) const;
    double operator()(std::span<const double> z) const { return eval(z); }

    GaussPoly derivative(int axis) const;
    GaussPoly derivative(const MultiIndex& alpha) const;

    /// multiply by q(z_axis), q given in coefficients around zero
    GaussPoly times_poly(int axis, const Polynomial& q) const;
    GaussPoly times_monomial(int axis, int power) const;

    GaussPoly operator+(const GaussPoly&) const;
    GaussPoly scaled(double s) const;

    /// exact integral over R^d; requires every axis width > 0
    double integral() const;
    /// exact moment: integral of z^alpha f(z) dz
    double moment(const MultiIndex& alpha) const;
    /// exact Fourier transform  integral f(z) e^{-i z.xi} dz
    std::complex<double> fourier(std::span<const double> xi) const;

    /// radius R with |f| below ~1e-18 * scale outside |z| <= R, with margin
    /// for polynomial weights up to degree extra_degree
    double decay_radius(int extra_degree = 8) const;

    void add_term(Term t);

private:
    int dim_;
    std::vector<Term> terms_;
};

/// Deterministic generator of random Gaussian-polynomial instances for
/// randomized identity suites.
class GaussPolySampler {
public:
    explicit GaussPolySampler(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    double uniform(double lo, double hi);
    int uniform_int(int lo, int hi);
    /// smooth decaying instance: 1-2 terms, per-axis degree <= max_degree
    GaussPoly sample(int dim, int max_degree = 2, double max_shift = 1.2);

private:
    std::uint64_t next();
    std::uint64_t state_;
};

}  // namespace anisoheat
