#pragma once

#include <map>
#include <span>
#include <vector>

#include "anisoheat/gauss_poly.hpp"
#include "anisoheat/multi_index.hpp"
#include "anisoheat/quadrature.hpp"
#include "anisoheat/sampled_function.hpp"

namespace anisoheat {

/// Quadrature controls for the moment / pairing integrals. Zero means "pick
/// from the function's decay radius and dimension".
struct QuadOptions {
    double box = 0.0;
    int points = 0;
    int gl_order = 48;

    double box_for(const SampledFunction& f) const;
    int points_for(int dim) const;
};

/// integral f(z) z^alpha dz by tensor trapezoid over the declared box.
double moment(const SampledFunction& f, const MultiIndex& alpha, const QuadOptions& opt = {});

/// Moment tables keyed by multi-index, for |alpha| <= k (Constraint::Full) or
/// |beta| + 2|gamma| <= k (Constraint::MixedOrder, beta = first m axes).
struct MomentTable {
    std::map<std::vector<int>, double> values;
    int max_order = 0;

    double at(const MultiIndex& a) const { return values.at(a.exponents()); }
};
enum class MomentConstraint { Full, MixedOrder };
MomentTable moment_table(const SampledFunction& f, int k, MomentConstraint constraint,
                         const DimensionSplit* split = nullptr, const QuadOptions& opt = {});

/// F_alpha(x) = (k+1) (-1)^{k+1}/alpha! int_0^1 (1-t)^k (x/t)^alpha f(x/t) dt/t^N,
/// |alpha| = k+1. The t integral is clipped at t_min = |x| / R_f, below which
/// the integrand vanishes by decay.
SampledFunction remainder_F_alpha(const SampledFunction& f, const MultiIndex& alpha, int k,
                                  int gl_order = 64);

/// F_gamma(x, y): scales the y block only. half = false takes |gamma| = k+1
/// with prefactor k+1; half = true takes k odd, |gamma| = (k+1)/2 with
/// prefactor (k+1)/2 and exponent (k-1)/2.
SampledFunction remainder_F_gamma(const SampledFunction& f, const DimensionSplit& split,
                                  const MultiIndex& gamma, int k, bool half, int gl_order = 64);

/// y-moment function x -> integral f(x, y) y^gamma dy.
SampledFunction y_moment(const SampledFunction& f, const DimensionSplit& split,
                         const MultiIndex& gamma, const QuadOptions& opt = {});

enum class RemainderRule { Lemma2_3, Lemma3_3 };

/// [R f]_{beta gamma}(x) = (-1)^{|beta|} |beta|/beta! int_0^1 (1-t)^{|beta|-1}
/// (x/t)^beta [M f]_gamma(x/t) dt/t^m, under the rule's index constraint
/// (|beta| + |gamma| = k+1 resp. |beta| + 2|gamma| = k+1).
SampledFunction remainder_R_betagamma(const SampledFunction& f, const DimensionSplit& split,
                                      const MultiIndex& beta, const MultiIndex& gamma, int k,
                                      RemainderRule rule, const QuadOptions& opt = {});

/// Residual of the split Taylor identity at z: both sides evaluated with
/// exact derivatives of phi and Gauss-Legendre t integrals.
double taylor_split_check(const GaussPoly& phi, const DimensionSplit& split,
                          std::span<const double> z, int k, int gl_order = 64);

enum class DecompositionRule { Lemma2_1, Lemma2_3, Lemma3_3 };

/// |<f, phi> - <decomposition(f), phi>|: the delta terms pair as
/// moment / (beta! gamma!) times the corresponding derivative of phi at 0,
/// the remainder terms pair by parts with sign (-1)^{order}.
double verify_decomposition(const SampledFunction& f, const GaussPoly& phi, int k,
                            DecompositionRule rule, const DimensionSplit& split,
                            const QuadOptions& opt = {});

/// L^p validity ranges of the remainder bounds: p = 1 always; p > 1 requires
/// p < dim/(dim-1), with dim = 1 imposing no bound.
bool lp_range_ok(double p, int dim);

}  // namespace anisoheat
