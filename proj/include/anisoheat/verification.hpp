#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "anisoheat/multi_index.hpp"

namespace anisoheat {

enum class LemmaId { L2_1, L2_2, L2_3, L3_3, L4_4, T4_5 };

/// "2.1" .. "4.5" -> id; throws on unknown ids
LemmaId lemma_from_string(const std::string& s);
std::string lemma_name(LemmaId id);

struct SuiteResult {
    double max_residual = 0.0;       // randomized Gaussian x polynomial instances
    double max_poly_residual = 0.0;  // polynomial test functions (exact cases)
    int instances = 0;
    double tolerance = 0.0;       // pass threshold for max_residual
    double poly_tolerance = 0.0;  // pass threshold for the polynomial cases
    bool pass() const { return max_residual < tolerance && max_poly_residual < poly_tolerance; }
};

/// Residual suite for one identity: `instances` randomized
/// Gaussian-polynomial data/test-function pairs plus the exact polynomial
/// cases. k < 0 draws k per instance (odd where the lemma requires it).
SuiteResult run_lemma_suite(LemmaId id, int k, const DimensionSplit& split, int heis_n,
                            int instances, std::uint64_t seed);

struct BoundCheck {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack() const { return lhs - rhs; }
};

/// Remainder-norm bounds for every admissible index combination with k <= k_max
/// on randomized data; each entry must satisfy lhs <= rhs + 1e-6.
std::vector<BoundCheck> run_bound_suite(int k_max, int instances_per_case, std::uint64_t seed);

}  // namespace anisoheat
