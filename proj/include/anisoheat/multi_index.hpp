#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace anisoheat {

/// Nonnegative integer exponent vector. Drives monomials z^alpha, factorials
/// and derivative orders.
class MultiIndex {
public:
    MultiIndex() = default;

    explicit MultiIndex(std::vector<int> exponents) : e_(std::move(exponents)) {
        for (int v : e_) {
            if (v < 0) throw std::invalid_argument("MultiIndex: negative exponent");
        }
    }

    static MultiIndex zero(int dim) { return MultiIndex(std::vector<int>(dim, 0)); }

    static MultiIndex unit(int dim, int axis) {
        std::vector<int> e(dim, 0);
        e.at(static_cast<std::size_t>(axis)) = 1;
        return MultiIndex(std::move(e));
    }

    int dim() const { return static_cast<int>(e_.size()); }
    int operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& exponents() const { return e_; }

    int order() const {
        int s = 0;
        for (int v : e_) s += v;
        return s;
    }

    /// alpha! = prod_i alpha_i!
    double factorial() const {
        double f = 1.0;
        for (int v : e_)
            for (int j = 2; j <= v; ++j) f *= j;
        return f;
    }

    bool operator==(const MultiIndex& o) const { return e_ == o.e_; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(e_[i]);
        }
        return s + ")";
    }

private:
    std::vector<int> e_;
};

/// z^alpha
inline double pow_multi(std::span<const double> z, const MultiIndex& alpha) {
    double r = 1.0;
    for (int i = 0; i < alpha.dim(); ++i) {
        for (int j = 0; j < alpha[i]; ++j) r *= z[static_cast<std::size_t>(i)];
    }
    return r;
}

/// All multi-indices of dimension dim with |alpha| == order.
std::vector<MultiIndex> indices_of_order(int dim, int order);

/// All multi-indices of dimension dim with |alpha| <= order, ordered by total
/// order then lexicographically.
std::vector<MultiIndex> indices_up_to(int dim, int order);

/// Dimension split z = (x, y) in R^m x R^n.
struct DimensionSplit {
    int m = 1;
    int n = 1;

    DimensionSplit() = default;
    DimensionSplit(int m_, int n_) : m(m_), n(n_) {
        if (m < 1 || n < 1) throw std::invalid_argument("DimensionSplit: m, n >= 1 required");
    }
    int dim() const { return m + n; }
};

}  // namespace anisoheat
