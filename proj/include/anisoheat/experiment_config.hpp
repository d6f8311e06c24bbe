#pragma once

#include <string>
#include <vector>

#include "anisoheat/asymptotics.hpp"

namespace anisoheat {

/// Batch experiment description: theorem, dimensions, expansion order, time
/// list, grids and the initial datum. Round-trips losslessly through JSON.
struct ExperimentConfig {
    std::string theorem;  // intro-isotropic | thm2_5 | thm3_2 | thm1_1 | thm1_3
    int m = 1;
    int n = 1;           // y-block (FFT families) / Heisenberg n (thm1_3)
    int k = 0;
    double p = 1.0;
    std::vector<double> t_list;        // empty: default
    std::vector<double> grid_extents;  // base extents at t = 1; empty: default
    std::vector<int> grid_counts;      // empty: default
    double tolerance = 0.0;            // 0: default

    struct Datum {
        std::string family = "gaussian";     // gaussian: prod exp(-a_i (z_i - c_i)^2)
        std::vector<double> widths;          // a_i; empty: all 1
        std::vector<double> centers;         // c_i; empty: all 0
        std::vector<int> powers;             // optional monomial factors (z_i - c_i)^e_i
        double coefficient = 1.0;
    } datum;

    std::string out_json;  // report destination; empty: stdout only
    std::string out_csv;   // (t, error, constant) table; empty: none

    TheoremId theorem_id() const;
    int dimension() const;
    /// throws std::invalid_argument naming the violated precondition
    void validate() const;

    SampledFunction build_datum() const;
    ExperimentReport run() const;

    std::string to_json_text() const;
    static ExperimentConfig from_json_text(const std::string& text);
};

std::string report_to_json_text(const ExperimentReport& report);
std::string report_to_csv_text(const ExperimentReport& report);

}  // namespace anisoheat
