#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "anisoheat/fit.hpp"
#include "anisoheat/kernels.hpp"
#include "anisoheat/norms.hpp"
#include "anisoheat/sampled_function.hpp"

namespace anisoheat {

/// Which moment terms the approximant keeps.
struct ExpansionRule {
    enum class Kind {
        IsotropicFull,        // |alpha| <= k
        SplitFull,            // |beta| + |gamma| <= k
        MixedOrder,           // |beta| + 2 |gamma| <= k
        HeisenbergFirstOrder  // mass + first z moments
    };
    Kind kind = Kind::IsotropicFull;
    int k = 0;
    double p = 1.0;

    /// index set as (beta, gamma) pairs over the spec's split
    std::vector<std::pair<MultiIndex, MultiIndex>> index_set(const DimensionSplit& split) const;
};

/// Lambda(p, k) = {(a, b): a, b >= 0, k+1-2N(1-1/p) <= a+2b, a+b <= k},
/// enumerated exhaustively over 0 <= a, b <= k.
std::vector<std::pair<int, int>> lambda_set(double p, int k, int N);

/// Moment-expansion approximant: sum over the rule's index set of
/// (-1)^{|(beta,gamma)|}/(beta! gamma!) (int f x^beta y^gamma) D^{beta gamma} kernel_t.
GridFunction build_approximant(const SampledFunction& f, const KernelSpec& spec,
                               const ExpansionRule& rule, double t, const Grid& grid);

/// Exact evolution: spectral product f_hat * symbol for the FFT families.
/// Heisenberg data goes through h_convolve (see run_theorem).
GridFunction solve(const SampledFunction& f, const KernelSpec& spec, double t, const Grid& grid);

/// || solve - approximant || in L^p, optionally weighted.
double expansion_error(const SampledFunction& f, const KernelSpec& spec, const ExpansionRule& rule,
                       double t, const Grid& grid, double p = 1.0,
                       const std::optional<WeightSpec>& weight = std::nullopt);

enum class TheoremId { IntroIsotropic, Thm2_5, Thm3_2, Thm1_1, Thm1_3 };

std::string theorem_name(TheoremId id);

struct ExperimentReport {
    TheoremId id = TheoremId::IntroIsotropic;
    int k = 0;
    double p = 1.0;
    std::vector<double> t_list;
    std::vector<double> errors;
    std::vector<double> bound_constants;  // C(t) = err(t) t^{-target} / rhs_norm
    double rhs_norm = 0.0;                // theorem-specific weighted norm of f
    DecayFit fit;
    double target_slope = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::vector<double> grid_extents;  // base extents at t = 1
    std::vector<int> grid_counts;

    double constant_spread() const;  // max / min of bound_constants
};

struct RunOptions {
    std::vector<double> t_list;       // empty: family default
    std::vector<double> base_extents; // empty: per-id default
    std::vector<int> grid_counts;     // empty: per-id default
    double tolerance = 0.0;           // 0: 0.05 FFT families, 0.07 Heisenberg
    int heis_source_points = 40;      // source grid nodes per z-axis
    int heis_source_theta = 24;
};

/// Runs the theorem's experiment: errors over t, decay fit, bound constants,
/// pass = (slope <= target + tolerance).
ExperimentReport run_theorem(TheoremId id, const SampledFunction& f, int k, double p,
                             const DimensionSplit& split, int heis_n = 1,
                             const RunOptions& opt = {});

}  // namespace anisoheat
