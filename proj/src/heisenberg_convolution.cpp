#include "anisoheat/heisenberg_convolution.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "anisoheat/parallel.hpp"

namespace anisoheat {

HGrid::HGrid(Grid g, int n_) : grid(std::move(g)), n(n_) {
    if (n < 1 || grid.dim() != 2 * n + 1)
        throw std::invalid_argument("HGrid: grid must have 2n+1 axes");
    for (int a = 0; a < grid.dim(); ++a)
        if (grid.count(a) > 48)
            throw std::invalid_argument("HGrid: per-axis counts are capped at 48 for O(M^2) convolution");
}

GridFunction h_convolve(const HGrid& src, const GridFunction& f, const HKernelTable& table,
                        double t, const HGrid& out, double prune_tol) {
    if (src.n != out.n || src.n != table.n())
        throw std::invalid_argument("h_convolve: mismatched Heisenberg dimensions");
    if (!(f.grid == src.grid)) throw std::invalid_argument("h_convolve: f does not live on src");
    if (t <= 0.0) throw std::invalid_argument("h_convolve: t > 0 required");
    const int n = src.n;
    const int zdim = 2 * n;

    // flatten the source nodes carrying mass
    double fmax = 0.0;
    for (double v : f.values) fmax = std::max(fmax, std::abs(v));
    const double cutoff = prune_tol * fmax;

    struct ThetaRun {
        std::vector<double> z;   // source z block (2n entries)
        double theta0;           // first theta node
        const double* w;         // f values * cell volume, contiguous over theta
        int len;
    };
    std::vector<ThetaRun> runs;
    std::vector<double> weights;  // stable storage referenced by runs

    const Grid& sg = src.grid;
    const int mtheta = sg.count(zdim);
    const double htheta = sg.spacing(zdim);
    const double cell = sg.cell_volume();
    std::size_t zslices = sg.size() / static_cast<std::size_t>(mtheta);

    weights.resize(sg.size());
    for (std::size_t i = 0; i < sg.size(); ++i) weights[i] = f.values[i] * cell;

    std::vector<int> idx(static_cast<std::size_t>(sg.dim()));
    for (std::size_t zs = 0; zs < zslices; ++zs) {
        const std::size_t base = zs * static_cast<std::size_t>(mtheta);
        bool any = false;
        for (int it = 0; it < mtheta; ++it)
            if (std::abs(f.values[base + static_cast<std::size_t>(it)]) > cutoff) {
                any = true;
                break;
            }
        if (!any) continue;
        sg.unflatten(base, idx.data());
        ThetaRun run;
        run.z.resize(static_cast<std::size_t>(zdim));
        for (int a = 0; a < zdim; ++a) run.z[static_cast<std::size_t>(a)] = sg.coord(a, idx[static_cast<std::size_t>(a)]);
        run.theta0 = sg.coord(zdim, 0);
        run.w = weights.data() + base;
        run.len = mtheta;
        runs.push_back(std::move(run));
    }

    const Grid& og = out.grid;
    GridFunction u = GridFunction::zeros(og);
    const double tinv = 1.0 / t;
    const double pref = std::pow(t, -(n + 1.0));

    parallel_for(og.size(), [&](std::size_t b, std::size_t e) {
        std::vector<int> oidx(static_cast<std::size_t>(og.dim()));
        std::vector<double> w(static_cast<std::size_t>(og.dim()));
        for (std::size_t i = b; i < e; ++i) {
            og.node(i, w.data());
            const double wtheta = w[static_cast<std::size_t>(zdim)];
            double acc = 0.0;
            for (const ThetaRun& run : runs) {
                // v^{-1} o w: z part w - v_z, theta part w_th - v_th + twist
                double r2 = 0.0, twist = 0.0;
                for (int a = 0; a < zdim; ++a) {
                    const double d = w[static_cast<std::size_t>(a)] - run.z[static_cast<std::size_t>(a)];
                    r2 += d * d;
                }
                for (int j = 0; j < n; ++j)
                    twist += run.z[static_cast<std::size_t>(j)] * w[static_cast<std::size_t>(n + j)] -
                             run.z[static_cast<std::size_t>(n + j)] * w[static_cast<std::size_t>(j)];
                const HKernelTable::SRow srow = table.s_stencil(r2 * tinv);
                if (!srow.valid) continue;
                double th = (wtheta - run.theta0 + 2.0 * twist) * tinv;
                const double dth = -htheta * tinv;
                for (int it = 0; it < run.len; ++it, th += dth) {
                    const double fv = run.w[it];
                    if (fv != 0.0) acc += fv * table.psi_theta(srow, th);
                }
            }
            u.values[i] = pref * acc;
        }
    });
    return u;
}

GridFunction h_convolve(const HGrid& g, const GridFunction& f, const HKernelTable& table,
                        double t) {
    return h_convolve(g, f, table, t, g);
}

}  // namespace anisoheat
