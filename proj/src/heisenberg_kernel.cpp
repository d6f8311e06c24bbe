#include "anisoheat/heisenberg_kernel.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "anisoheat/parallel.hpp"

namespace anisoheat {

namespace {

/// 2 sigma / sinh(2 sigma), continued by 1 at sigma = 0
double sinh_ratio(double s) {
    if (std::abs(s) < 1e-8) return 1.0;
    return 2.0 * s / std::sinh(2.0 * s);
}

/// sigma / tanh(2 sigma), continued by 1/2 at sigma = 0
double tanh_ratio(double s) {
    if (std::abs(s) < 1e-8) return 0.5;
    return s / std::tanh(2.0 * s);
}

}  // namespace

SigmaQuadrature SigmaQuadrature::make(int n, int panels, double S) {
    if (n < 1) throw std::invalid_argument("SigmaQuadrature: n >= 1 required");
    if (panels < 64) throw std::invalid_argument("SigmaQuadrature: need >= 64 panels");
    if (S <= 0.0) S = std::max(20.0, 20.0 / n);
    SigmaQuadrature q;
    q.S = S;
    const double h = 2.0 * S / panels;
    q.node.resize(static_cast<std::size_t>(panels) + 1);
    q.weight.resize(static_cast<std::size_t>(panels) + 1);
    for (int i = 0; i <= panels; ++i) {
        q.node[static_cast<std::size_t>(i)] = -S + i * h;
        q.weight[static_cast<std::size_t>(i)] = (i == 0 || i == panels) ? 0.5 * h : h;
    }
    return q;
}

HeisenbergKernel::HeisenbergKernel(int n, SigmaQuadrature quad) : n_(n), quad_(std::move(quad)) {
    if (n_ < 1) throw std::invalid_argument("HeisenbergKernel: n >= 1 required");
    wn_.resize(quad_.node.size());
    c_.resize(quad_.node.size());
    for (std::size_t i = 0; i < quad_.node.size(); ++i) {
        const double s = quad_.node[i];
        wn_[i] = quad_.weight[i] * std::pow(sinh_ratio(s), n_);
        c_[i] = tanh_ratio(s);
    }
}

struct HeisenbergKernel::Sums {
    // complex moments  sum_q E_q * sigma^p * c(sigma)^r  for p + r <= order
    std::complex<double> m[3][3] = {};
    double abs_total = 0.0;
};

HeisenbergKernel::Sums HeisenbergKernel::integrate(std::span<const double> z, double theta,
                                                   double t, int order) const {
    if (static_cast<int>(z.size()) != 2 * n_)
        throw std::invalid_argument("HeisenbergKernel: z must have length 2n");
    if (t <= 0.0) throw std::invalid_argument("HeisenbergKernel: t > 0 required");
    double r2 = 0.0;
    for (double v : z) r2 += v * v;
    const double rt = r2 / (2.0 * t);
    const double th = theta / (2.0 * t);
    Sums s;
    for (std::size_t i = 0; i < quad_.node.size(); ++i) {
        const double sg = quad_.node[i];
        const double amp = wn_[i] * std::exp(-rt * c_[i]);
        const std::complex<double> e = amp * std::exp(std::complex<double>(0.0, sg * th));
        s.abs_total += std::abs(amp);
        double sp = 1.0;
        for (int p = 0; p + 0 <= order; ++p) {
            double cr = 1.0;
            for (int r = 0; p + r <= order; ++r) {
                s.m[p][r] += e * (sp * cr);
                cr *= c_[i];
            }
            sp *= sg;
        }
    }
    return s;
}

namespace {

double checked_real(const std::complex<double>& v, double scale) {
    if (std::abs(v.imag()) > 1e-10 * std::max(1.0, scale) + 1e-300)
        throw std::runtime_error("heisenberg kernel: imaginary residue above tolerance");
    return v.real();
}

}  // namespace

double HeisenbergKernel::value(std::span<const double> z, double theta) const {
    return value_t(z, theta, 1.0);
}

double HeisenbergKernel::value_t(std::span<const double> z, double theta, double t) const {
    const Sums s = integrate(z, theta, t, 0);
    const double pref = std::pow(4.0 * std::numbers::pi, -(n_ + 1.0)) * std::pow(t, -(n_ + 1.0));
    return pref * checked_real(s.m[0][0], s.abs_total);
}

double HeisenbergKernel::derivative(Deriv kind, int j, int k, std::span<const double> z,
                                    double theta, double t) const {
    const int two_n = 2 * n_;
    if (kind != Deriv::Theta && (j < 1 || j > two_n))
        throw std::invalid_argument("heisenberg derivative: j outside 1..2n");
    if (kind == Deriv::ZjZk && (k < 1 || k > two_n))
        throw std::invalid_argument("heisenberg derivative: k outside 1..2n");

    const Sums s = integrate(z, theta, t, kind == Deriv::ZjZk ? 2 : 1);
    const double pref = std::pow(4.0 * std::numbers::pi, -(n_ + 1.0)) * std::pow(t, -(n_ + 1.0));
    using cd = std::complex<double>;
    const cd I(0.0, 1.0);

    // multipliers under the integral:
    //   d/dtheta   -> i sigma / (2 t)
    //   d/dz_j     -> -(z_j / t) c(sigma)
    // Z_j = d/dz_j + 2 eps_j z_{p(j)} d/dtheta with eps_j = +1, p(j) = n+j for
    // j <= n and eps_j = -1, p(j) = j-n otherwise.
    auto eps = [&](int f) { return f <= n_ ? 1.0 : -1.0; };
    auto partner = [&](int f) { return f <= n_ ? f - 1 + n_ : f - 1 - n_; };
    auto zc = [&](int axis) { return z[static_cast<std::size_t>(axis)]; };

    cd out;
    if (kind == Deriv::Theta) {
        out = I / (2.0 * t) * s.m[1][0];
    } else {
        const double aj = -zc(j - 1) / t;                     // coefficient of c(sigma)
        const double bj = eps(j) * zc(partner(j)) / t;        // coefficient of i sigma
        if (kind == Deriv::Zj) {
            out = aj * s.m[0][1] + bj * I * s.m[1][0];
        } else {
            const double ak = -zc(k - 1) / t;
            const double bk = eps(k) * zc(partner(k)) / t;
            // A_j A_k + d(A_k)/d(z_j) with A = a c + i b sigma
            out = aj * ak * s.m[0][2] + I * (aj * bk + ak * bj) * s.m[1][1] - bj * bk * s.m[2][0];
            if (j == k) out -= s.m[0][1] / t;                           // -c / t
            if (j - 1 == partner(k)) out += I * eps(k) / t * s.m[1][0];  // d/dz_j of 2 eps_k z_{p(k)} * (i sigma / 2t)
        }
    }
    return pref * checked_real(out, s.abs_total * (1.0 + 1.0 / t));
}

double heisenberg_kernel(std::span<const double> z, double theta, const SigmaQuadrature& quad) {
    HeisenbergKernel k(static_cast<int>(z.size()) / 2, quad);
    return k.value(z, theta);
}

double heisenberg_kernel_t(std::span<const double> z, double theta, double t,
                           const SigmaQuadrature& quad) {
    HeisenbergKernel k(static_cast<int>(z.size()) / 2, quad);
    return k.value_t(z, theta, t);
}

double heisenberg_kernel_derivative(HeisenbergKernel::Deriv kind, int j, int k,
                                    std::span<const double> z, double theta, double t,
                                    const SigmaQuadrature& quad) {
    HeisenbergKernel kn(static_cast<int>(z.size()) / 2, quad);
    return kn.derivative(kind, j, k, z, theta, t);
}

HKernelTable::HKernelTable(int n, const SigmaQuadrature& quad)
    : HKernelTable(n, quad, Options()) {}

HKernelTable::HKernelTable(int n, const SigmaQuadrature& quad, const Options& opt)
    : n_(n), opt_(opt) {
    if (n < 1) throw std::invalid_argument("HKernelTable: n >= 1 required");
    // row 0 is a ghost at s = -ds (Psi extends analytically to small s < 0),
    // so the cubic stencil is complete down to s = 0
    ns_ = static_cast<int>(std::ceil(opt.s_max / opt.ds)) + 2;
    ntheta_ = 2 * static_cast<int>(std::ceil(opt.theta_max / opt.dtheta)) + 1;
    table_.assign(static_cast<std::size_t>(ns_) * static_cast<std::size_t>(ntheta_), 0.0);

    const double pref = std::pow(4.0 * std::numbers::pi, -(n + 1.0));
    std::vector<double> wn(quad.node.size()), c(quad.node.size());
    for (std::size_t i = 0; i < quad.node.size(); ++i) {
        wn[i] = quad.weight[i] * std::pow(sinh_ratio(quad.node[i]), n);
        c[i] = tanh_ratio(quad.node[i]);
    }

    parallel_for(static_cast<std::size_t>(ns_), [&](std::size_t b, std::size_t e) {
        for (std::size_t is = b; is < e; ++is) {
            const double s = (static_cast<double>(is) - 1.0) * opt_.ds;
            double* row = table_.data() + is * static_cast<std::size_t>(ntheta_);
            for (std::size_t q = 0; q < quad.node.size(); ++q) {
                const double amp = wn[q] * std::exp(-0.5 * s * c[q]);
                if (amp == 0.0) continue;
                // rotate through the uniformly spaced theta nodes
                const double ang0 = quad.node[q] * 0.5 * (-opt_.theta_max);
                const double dang = quad.node[q] * 0.5 * opt_.dtheta;
                double cs = std::cos(ang0), sn = std::sin(ang0);
                const double dc = std::cos(dang), dsn = std::sin(dang);
                for (int it = 0; it < ntheta_; ++it) {
                    row[it] += amp * cs;
                    const double nc = cs * dc - sn * dsn;
                    sn = cs * dsn + sn * dc;
                    cs = nc;
                }
            }
            for (int it = 0; it < ntheta_; ++it) row[it] *= pref;
        }
    });

    for (double v : table_) peak_ = std::max(peak_, std::abs(v));
    // decay completeness: boundary rows/columns must be negligible, so that
    // out-of-box lookups may return 0
    double boundary = 0.0;
    for (int is = ns_ - 4; is < ns_; ++is)
        for (int it = 0; it < ntheta_; ++it)
            boundary = std::max(boundary, std::abs(table_[static_cast<std::size_t>(is) * ntheta_ + it]));
    for (int is = 0; is < ns_; ++is) {
        for (int b = 0; b < 4; ++b) {
            boundary = std::max(boundary, std::abs(table_[static_cast<std::size_t>(is) * ntheta_ + b]));
            boundary =
                std::max(boundary, std::abs(table_[static_cast<std::size_t>(is) * ntheta_ + ntheta_ - 1 - b]));
        }
    }
    if (boundary > opt_.decay_check * peak_)
        throw std::runtime_error("HKernelTable: tabulated box is not decay complete; enlarge s_max/theta_max");
}

namespace {

inline void cr_weights(double s, double w[4]) {
    const double s2 = s * s, s3 = s2 * s;
    w[0] = 0.5 * (-s3 + 2.0 * s2 - s);
    w[1] = 0.5 * (3.0 * s3 - 5.0 * s2 + 2.0);
    w[2] = 0.5 * (-3.0 * s3 + 4.0 * s2 + s);
    w[3] = 0.5 * (s3 - s2);
}

}  // namespace

double HKernelTable::psi(double s, double theta) const {
    if (s < 0.0) throw std::invalid_argument("HKernelTable::psi: s >= 0 required");
    const double fs = s / opt_.ds + 1.0;  // ghost row offset
    const double ft = (theta + opt_.theta_max) / opt_.dtheta;
    const int is = static_cast<int>(fs), it = static_cast<int>(ft);
    // outside the decay-complete box the kernel is below the build threshold
    if (is + 2 > ns_ - 1 || it < 1 || it + 2 > ntheta_ - 1) return 0.0;

    double ws[4], wt[4];
    cr_weights(fs - is, ws);
    cr_weights(ft - it, wt);
    double acc = 0.0;
    for (int a = 0; a < 4; ++a) {
        const double* row = table_.data() + static_cast<std::size_t>(is - 1 + a) * ntheta_;
        const double* col = row + (it - 1);
        acc += ws[a] * (wt[0] * col[0] + wt[1] * col[1] + wt[2] * col[2] + wt[3] * col[3]);
    }
    return acc;
}

double HKernelTable::value_t(std::span<const double> z, double theta, double t) const {
    if (t <= 0.0) throw std::invalid_argument("HKernelTable::value_t: t > 0 required");
    double r2 = 0.0;
    for (double v : z) r2 += v * v;
    return std::pow(t, -(n_ + 1.0)) * psi(r2 / t, theta / t);
}

HKernelTable::SRow HKernelTable::s_stencil(double s) const {
    SRow r;
    if (s < 0.0) return r;
    const double fs = s / opt_.ds + 1.0;
    const int is = static_cast<int>(fs);
    if (is + 2 > ns_ - 1) return r;
    cr_weights(fs - is, r.ws);
    for (int a = 0; a < 4; ++a)
        r.rows[a] = table_.data() + static_cast<std::size_t>(is - 1 + a) * ntheta_;
    r.valid = true;
    return r;
}

double HKernelTable::psi_theta(const SRow& r, double theta) const {
    if (!r.valid) return 0.0;
    const double ft = (theta + opt_.theta_max) / opt_.dtheta;
    const int it = static_cast<int>(ft);
    if (it < 1 || it + 2 > ntheta_ - 1) return 0.0;
    double wt[4];
    cr_weights(ft - it, wt);
    double acc = 0.0;
    for (int a = 0; a < 4; ++a) {
        const double* col = r.rows[a] + (it - 1);
        acc += r.ws[a] * (wt[0] * col[0] + wt[1] * col[1] + wt[2] * col[2] + wt[3] * col[3]);
    }
    return acc;
}

}  // namespace anisoheat
