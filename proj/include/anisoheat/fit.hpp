#pragma once

#include <cmath>
#include <span>
#include <stdexcept>

namespace anisoheat {

/// Least-squares fit of log(err) against log(t): the numerical proxy for a
/// proved decay rate err ~ t^slope.
struct DecayFit {
    double slope = 0.0;
    double intercept = 0.0;
    double max_residual = 0.0;  // max |log err - (intercept + slope log t)|
    double t_min = 0.0;
    double t_max = 0.0;
};

inline DecayFit decay_fit(std::span<const double> t, std::span<const double> err) {
    if (t.size() != err.size() || t.size() < 3)
        throw std::invalid_argument("decay_fit: need >= 3 (t, err) pairs");
    double prev = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] <= prev) throw std::invalid_argument("decay_fit: t must be positive increasing");
        if (!(err[i] > 0.0)) throw std::invalid_argument("decay_fit: errors must be positive");
        prev = t[i];
    }
    const double n = static_cast<double>(t.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const double x = std::log(t[i]), y = std::log(err[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    DecayFit fit;
    fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    fit.intercept = (sy - fit.slope * sx) / n;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const double r = std::log(err[i]) - (fit.intercept + fit.slope * std::log(t[i]));
        fit.max_residual = std::max(fit.max_residual, std::abs(r));
    }
    fit.t_min = t.front();
    fit.t_max = t.back();
    return fit;
}

}  // namespace anisoheat
