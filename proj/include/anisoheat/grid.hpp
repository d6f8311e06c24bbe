#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace anisoheat {

/// Uniform tensor grid on the half-open box prod_i [-L_i, L_i), M_i nodes per
/// axis, spacing h_i = 2 L_i / M_i. Storage is row major with the last axis
/// contiguous.
class Grid {
public:
    Grid() = default;

    Grid(std::vector<double> extents, std::vector<int> counts)
        : extents_(std::move(extents)), counts_(std::move(counts)) {
        if (extents_.empty() || extents_.size() != counts_.size())
            throw std::invalid_argument("Grid: extents/counts size mismatch");
        spacing_.resize(extents_.size());
        for (std::size_t i = 0; i < extents_.size(); ++i) {
            if (extents_[i] <= 0.0) throw std::invalid_argument("Grid: extent must be positive");
            if (counts_[i] < 8 || counts_[i] % 2 != 0)
                throw std::invalid_argument("Grid: axis count must be even and >= 8");
            spacing_[i] = 2.0 * extents_[i] / counts_[i];
        }
        strides_.assign(counts_.size(), 1);
        for (int a = static_cast<int>(counts_.size()) - 2; a >= 0; --a)
            strides_[a] = strides_[a + 1] * static_cast<std::size_t>(counts_[a + 1]);
    }

    static Grid cube(int dim, double extent, int count) {
        return Grid(std::vector<double>(static_cast<std::size_t>(dim), extent),
                    std::vector<int>(static_cast<std::size_t>(dim), count));
    }

    int dim() const { return static_cast<int>(counts_.size()); }

    std::size_t size() const {
        std::size_t s = 1;
        for (int c : counts_) s *= static_cast<std::size_t>(c);
        return s;
    }

    double extent(int a) const { return extents_[static_cast<std::size_t>(a)]; }
    int count(int a) const { return counts_[static_cast<std::size_t>(a)]; }
    double spacing(int a) const { return spacing_[static_cast<std::size_t>(a)]; }
    std::size_t stride(int a) const { return strides_[static_cast<std::size_t>(a)]; }

    double coord(int a, int i) const {
        return -extents_[static_cast<std::size_t>(a)] + i * spacing_[static_cast<std::size_t>(a)];
    }

    /// prod_i h_i
    double cell_volume() const {
        double v = 1.0;
        for (double h : spacing_) v *= h;
        return v;
    }

    void unflatten(std::size_t flat, int* idx) const {
        for (int a = dim() - 1; a >= 0; --a) {
            int c = counts_[static_cast<std::size_t>(a)];
            idx[a] = static_cast<int>(flat % static_cast<std::size_t>(c));
            flat /= static_cast<std::size_t>(c);
        }
    }

    std::size_t flatten(const int* idx) const {
        std::size_t f = 0;
        for (int a = 0; a < dim(); ++a) f += strides_[static_cast<std::size_t>(a)] * static_cast<std::size_t>(idx[a]);
        return f;
    }

    void node(std::size_t flat, double* out) const {
        for (int a = dim() - 1; a >= 0; --a) {
            int c = counts_[static_cast<std::size_t>(a)];
            out[a] = coord(a, static_cast<int>(flat % static_cast<std::size_t>(c)));
            flat /= static_cast<std::size_t>(c);
        }
    }

    bool operator==(const Grid& o) const {
        return extents_ == o.extents_ && counts_ == o.counts_;
    }

private:
    std::vector<double> extents_;
    std::vector<int> counts_;
    std::vector<double> spacing_;
    std::vector<std::size_t> strides_;
};

/// Scalar field sampled on a Grid. Values are immutable after construction in
/// all library code paths; norms and quadrature treat them read-only.
struct GridFunction {
    Grid grid;
    std::vector<double> values;

    GridFunction() = default;
    GridFunction(Grid g, std::vector<double> v) : grid(std::move(g)), values(std::move(v)) {
        if (values.size() != grid.size())
            throw std::invalid_argument("GridFunction: value count != node count");
    }

    static GridFunction zeros(const Grid& g) { return GridFunction(g, std::vector<double>(g.size(), 0.0)); }
};

/// Sample a callable on every node of the grid.
template <class F>
GridFunction sample(const Grid& g, F&& f) {
    std::vector<double> v(g.size());
    std::vector<double> pt(static_cast<std::size_t>(g.dim()));
    for (std::size_t i = 0; i < v.size(); ++i) {
        g.node(i, pt.data());
        v[i] = f(std::span<const double>(pt));
    }
    return GridFunction(g, std::move(v));
}

}  // namespace anisoheat
