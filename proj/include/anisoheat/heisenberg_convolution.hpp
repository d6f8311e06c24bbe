#pragma once

#include "anisoheat/grid.hpp"
#include "anisoheat/heisenberg_kernel.hpp"

namespace anisoheat {

/// Grid over H^n: 2n z-axes followed by the theta axis (dilation exponent 1
/// where the z-axes carry 1/2).
struct HGrid {
    Grid grid;
    int n = 1;

    HGrid() = default;
    HGrid(Grid g, int n_);
};

/// Group convolution u = f * H_t by direct summation,
///   u(w) = sum_v f(v) H_t(v^{-1} o w) prod h_src,
/// with kernel values drawn from the bicubic table. Source and output grids
/// may differ: the source resolves f, the output tracks the t-scaled kernel.
/// Per-axis counts are capped at 48 (O(M^2) cost).
GridFunction h_convolve(const HGrid& src, const GridFunction& f, const HKernelTable& table,
                        double t, const HGrid& out, double prune_tol = 1e-14);

/// Convolution on a single grid (source = output).
GridFunction h_convolve(const HGrid& g, const GridFunction& f, const HKernelTable& table, double t);

}  // namespace anisoheat
