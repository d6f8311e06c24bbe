// anisoheat: kernel evaluation, decomposition verification and decay-rate
// experiments for the isotropic, mixed-order and Heisenberg heat flows.
//
// Subcommands:
//   kernel  sample a fundamental solution (optionally a derivative) to CSV
//   verify  run a lemma/theorem residual suite
//   rates   run a theorem experiment from a JSON config
//
// Exit codes: 0 pass, 1 rate/residual check failure, 2 usage or config error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "anisoheat/experiment_config.hpp"
#include "anisoheat/heisenberg_kernel.hpp"
#include "anisoheat/kernels.hpp"
#include "anisoheat/norms.hpp"
#include "anisoheat/quadrature.hpp"
#include "anisoheat/verification.hpp"

namespace {

using namespace anisoheat;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    out << text;
}

std::string kernel_csv(const GridFunction& f) {
    std::ostringstream out;
    const Grid& g = f.grid;
    for (int a = 0; a < g.dim(); ++a) out << "z" << a << ",";
    out << "value\n";
    std::vector<double> pt(static_cast<std::size_t>(g.dim()));
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        g.node(i, pt.data());
        for (double c : pt) out << fmt(c) << ",";
        out << fmt(f.values[i]) << "\n";
    }
    return out.str();
}

int cmd_kernel(const std::string& family, int m, int n, double t, double extent, int points,
               const std::vector<int>& deriv, const std::string& out_path) {
    GridFunction k;
    if (family == "isotropic" || family == "mixed") {
        const KernelSpec spec =
            family == "mixed" ? KernelSpec::mixed_order(m, n) : KernelSpec::isotropic(m, n);
        const int N = spec.dim();
        std::vector<double> base(static_cast<std::size_t>(N), extent);
        std::vector<int> counts(static_cast<std::size_t>(N), points);
        const Grid g = scaled_grid(spec, base, counts, t);
        if (!deriv.empty()) {
            if (static_cast<int>(deriv.size()) != N)
                throw CLI::ValidationError("--deriv needs one order per axis");
            MultiIndex beta(std::vector<int>(deriv.begin(), deriv.begin() + m));
            MultiIndex gamma(std::vector<int>(deriv.begin() + m, deriv.end()));
            k = kernel_derivative(spec, beta, gamma, t, g);
        } else {
            k = family == "mixed" ? mixed_kernel(g, spec.split, t) : gaussian_kernel(g, t);
        }
    } else if (family == "heisenberg") {
        if (!deriv.empty())
            throw CLI::ValidationError("--deriv applies to the isotropic/mixed families only");
        const KernelSpec spec = KernelSpec::heisenberg(n);
        const int N = spec.dim();
        std::vector<double> base(static_cast<std::size_t>(N), 10.0);
        base.back() = 40.0;
        std::vector<int> counts(static_cast<std::size_t>(N), points);
        const Grid g = scaled_grid(spec, base, counts, t);
        const HKernelTable table(n, SigmaQuadrature::make(n));
        k = sample(g, [&](std::span<const double> z) {
            return table.value_t(z.first(z.size() - 1), z.back(), t);
        });
    } else {
        throw CLI::ValidationError("unknown --family (isotropic | mixed | heisenberg)");
    }

    const double mass = quad_integral(k);
    const double l1 = weighted_lp_norm(k, WeightSpec::radial(0.0), 1.0);
    const double l2 = weighted_lp_norm(k, WeightSpec::radial(0.0), 2.0);
    if (!out_path.empty()) write_file(out_path, kernel_csv(k));
    std::cout << "family=" << family << " t=" << fmt(t) << " mass=" << fmt(mass)
              << " l1=" << fmt(l1) << " l2=" << fmt(l2) << "\n";
    return 0;
}

int cmd_verify(const std::string& lemma, int k, int m, int n, int heis_n, int instances,
               std::uint64_t seed) {
    const LemmaId id = lemma_from_string(lemma);
    const SuiteResult res = run_lemma_suite(id, k, DimensionSplit(m, n), heis_n, instances, seed);
    std::cout << "lemma " << lemma_name(id) << ": instances=" << res.instances
              << " max_residual=" << fmt(res.max_residual)
              << " poly_residual=" << fmt(res.max_poly_residual)
              << " tolerance=" << fmt(res.tolerance) << (res.pass() ? " PASS" : " FAIL") << "\n";
    return res.pass() ? 0 : 1;
}

int cmd_rates(const std::string& config_path, std::string out_json, std::string out_csv) {
    std::ifstream in(config_path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read config file " + config_path);
    std::stringstream buf;
    buf << in.rdbuf();
    const ExperimentConfig cfg = ExperimentConfig::from_json_text(buf.str());
    cfg.validate();
    const ExperimentReport report = cfg.run();

    if (out_json.empty()) out_json = cfg.out_json;
    if (out_csv.empty()) out_csv = cfg.out_csv;
    const std::string jtext = report_to_json_text(report);
    if (!out_json.empty()) write_file(out_json, jtext);
    if (!out_csv.empty()) write_file(out_csv, report_to_csv_text(report));
    std::cout << jtext;
    return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"moment asymptotics of anisotropic heat kernels"};
    app.require_subcommand(1);

    auto* kernel = app.add_subcommand("kernel", "sample a fundamental solution to CSV");
    std::string family;
    int m = 1, n = 1, points = 64;
    double t = 0.0, extent = 12.0;
    std::vector<int> deriv;
    std::string out_path;
    kernel->add_option("--family", family, "isotropic | mixed | heisenberg")->required();
    kernel->add_option("--m", m, "x-block dimension (isotropic/mixed)");
    kernel->add_option("--n", n, "y-block dimension, or Heisenberg n");
    kernel->add_option("--t", t, "time, > 0")->required();
    kernel->add_option("--extent", extent, "base half-width at t = 1");
    kernel->add_option("--points", points, "nodes per axis (even)");
    kernel->add_option("--deriv", deriv, "derivative orders, one per axis")->delimiter(',');
    kernel->add_option("--out", out_path, "CSV output path");

    auto* verify = app.add_subcommand("verify", "run a decomposition residual suite");
    std::string lemma;
    int vk = -1, vheis_n = 1, instances = 20;
    std::uint64_t seed = 20240901ull;
    int vm = 1, vn = 1, vdim = 0;
    verify->add_option("--lemma", lemma, "2.1 | 2.2 | 2.3 | 3.3 | 4.4 | 4.5")->required();
    verify->add_option("--k", vk, "expansion order (default: randomized per instance)");
    verify->add_option("--dim", vdim, "total dimension (split evenly; overrides --m/--n)");
    verify->add_option("--m", vm, "x-block dimension");
    verify->add_option("--n", vn, "y-block dimension / Heisenberg n");
    verify->add_option("--instances", instances, "randomized instances");
    verify->add_option("--seed", seed, "RNG seed");

    auto* rates = app.add_subcommand("rates", "run a theorem experiment from a JSON config");
    std::string config_path, rjson, rcsv;
    rates->add_option("config", config_path, "config file (JSON)")->required();
    rates->add_option("--out-json", rjson, "report JSON path (overrides config)");
    rates->add_option("--out-csv", rcsv, "error table CSV path (overrides config)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (kernel->parsed()) {
            if (t <= 0.0) throw CLI::ValidationError("--t must be positive");
            return cmd_kernel(family, m, n, t, extent, points, deriv, out_path);
        }
        if (verify->parsed()) {
            if (vdim > 0) {
                vm = std::max(1, vdim / 2);
                vn = vdim - vm;
            }
            vheis_n = vn;
            return cmd_verify(lemma, vk, vm, vn, vheis_n, instances, seed);
        }
        if (rates->parsed()) return cmd_rates(config_path, rjson, rcsv);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
