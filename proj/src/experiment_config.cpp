#include "anisoheat/experiment_config.hpp"

#include <json.hpp>

#include "anisoheat/moments.hpp"

#include <cstdio>
#include <stdexcept>

namespace anisoheat {

using nlohmann::json;

TheoremId ExperimentConfig::theorem_id() const {
    if (theorem == "intro-isotropic") return TheoremId::IntroIsotropic;
    if (theorem == "thm2_5") return TheoremId::Thm2_5;
    if (theorem == "thm3_2") return TheoremId::Thm3_2;
    if (theorem == "thm1_1") return TheoremId::Thm1_1;
    if (theorem == "thm1_3") return TheoremId::Thm1_3;
    throw std::invalid_argument("config: unknown theorem id '" + theorem + "'");
}

int ExperimentConfig::dimension() const {
    return theorem_id() == TheoremId::Thm1_3 ? 2 * n + 1 : m + n;
}

void ExperimentConfig::validate() const {
    const TheoremId id = theorem_id();
    if (m < 1 || n < 1) throw std::invalid_argument("config: m, n >= 1 required");
    if (k < 0) throw std::invalid_argument("config: k >= 0 required");
    if (p < 1.0) throw std::invalid_argument("config: p >= 1 required");
    if (id == TheoremId::Thm1_1 && k % 2 == 0) throw std::invalid_argument("config: k must be odd");
    if ((id == TheoremId::Thm1_1 || id == TheoremId::Thm3_2 || id == TheoremId::Thm1_3) && p != 1.0)
        throw std::invalid_argument("config: this theorem is stated for p = 1");
    if (id == TheoremId::Thm2_5 && (!lp_range_ok(p, m) || !lp_range_ok(p, n)))
        throw std::invalid_argument("config: thm2_5 needs p < min(m/(m-1), n/(n-1))");
    if (id == TheoremId::IntroIsotropic) {
        const int N = m + n;
        if (N >= 2 && p > static_cast<double>(N) / (N - 1))
            throw std::invalid_argument("config: intro expansion needs p <= N/(N-1)");
    }
    const int N = dimension();
    auto check_len = [&](std::size_t got, const char* what) {
        if (got != 0 && got != static_cast<std::size_t>(N))
            throw std::invalid_argument(std::string("config: ") + what + " must have one entry per axis");
    };
    check_len(grid_extents.size(), "grid_extents");
    check_len(grid_counts.size(), "grid_counts");
    check_len(datum.widths.size(), "datum.widths");
    check_len(datum.centers.size(), "datum.centers");
    check_len(datum.powers.size(), "datum.powers");
    if (datum.family != "gaussian") throw std::invalid_argument("config: unknown datum family");
    for (double w : datum.widths)
        if (w <= 0.0) throw std::invalid_argument("config: datum widths must be positive");
    double prev = 0.0;
    for (double t : t_list) {
        if (t <= prev) throw std::invalid_argument("config: t_list must be positive increasing");
        prev = t;
    }
}

SampledFunction ExperimentConfig::build_datum() const {
    const int N = dimension();
    std::vector<double> w = datum.widths.empty() ? std::vector<double>(static_cast<std::size_t>(N), 1.0)
                                                 : datum.widths;
    std::vector<double> c = datum.centers.empty() ? std::vector<double>(static_cast<std::size_t>(N), 0.0)
                                                  : datum.centers;
    GaussPoly g = GaussPoly::gaussian(w, c, datum.coefficient);
    for (std::size_t i = 0; i < datum.powers.size(); ++i)
        if (datum.powers[i] > 0) {
            // monomial in (z_i - c_i), keeping the factorization explicit
            Polynomial q = Polynomial::monomial(datum.powers[i]).shifted(-c[i]);
            g = g.times_poly(static_cast<int>(i), q);
        }
    return SampledFunction::from_gauss_poly(g);
}

ExperimentReport ExperimentConfig::run() const {
    validate();
    RunOptions opt;
    opt.t_list = t_list;
    opt.base_extents = grid_extents;
    opt.grid_counts = grid_counts;
    opt.tolerance = tolerance;
    return run_theorem(theorem_id(), build_datum(), k, p, DimensionSplit(m, n), n, opt);
}

namespace {

json config_to_json(const ExperimentConfig& c) {
    json j;
    j["theorem"] = c.theorem;
    j["m"] = c.m;
    j["n"] = c.n;
    j["k"] = c.k;
    j["p"] = c.p;
    j["t_list"] = c.t_list;
    j["grid_extents"] = c.grid_extents;
    j["grid_counts"] = c.grid_counts;
    j["tolerance"] = c.tolerance;
    j["datum"] = {{"family", c.datum.family},     {"widths", c.datum.widths},
                  {"centers", c.datum.centers},   {"powers", c.datum.powers},
                  {"coefficient", c.datum.coefficient}};
    j["out_json"] = c.out_json;
    j["out_csv"] = c.out_csv;
    return j;
}

}  // namespace

std::string ExperimentConfig::to_json_text() const { return config_to_json(*this).dump(2) + "\n"; }

ExperimentConfig ExperimentConfig::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config: JSON parse error: ") + e.what());
    }
    ExperimentConfig c;
    try {
        j.at("theorem").get_to(c.theorem);
        c.m = j.value("m", 1);
        c.n = j.value("n", 1);
        c.k = j.value("k", 0);
        c.p = j.value("p", 1.0);
        c.t_list = j.value("t_list", std::vector<double>{});
        c.grid_extents = j.value("grid_extents", std::vector<double>{});
        c.grid_counts = j.value("grid_counts", std::vector<int>{});
        c.tolerance = j.value("tolerance", 0.0);
        if (j.contains("datum")) {
            const json& d = j.at("datum");
            c.datum.family = d.value("family", std::string("gaussian"));
            c.datum.widths = d.value("widths", std::vector<double>{});
            c.datum.centers = d.value("centers", std::vector<double>{});
            c.datum.powers = d.value("powers", std::vector<int>{});
            c.datum.coefficient = d.value("coefficient", 1.0);
        }
        c.out_json = j.value("out_json", std::string{});
        c.out_csv = j.value("out_csv", std::string{});
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("config: ") + e.what());
    }
    return c;
}

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string report_to_json_text(const ExperimentReport& r) {
    json j;
    j["theorem"] = theorem_name(r.id);
    j["k"] = r.k;
    j["p"] = r.p;
    j["t_list"] = r.t_list;
    j["errors"] = r.errors;
    j["bound_constants"] = r.bound_constants;
    j["rhs_norm"] = r.rhs_norm;
    j["slope"] = r.fit.slope;
    j["intercept"] = r.fit.intercept;
    j["max_residual"] = r.fit.max_residual;
    j["target_slope"] = r.target_slope;
    j["tolerance"] = r.tolerance;
    j["constant_spread"] = r.constant_spread();
    j["pass"] = r.pass;
    j["grid"] = {{"base_extents", r.grid_extents}, {"counts", r.grid_counts}};
    return j.dump(2) + "\n";
}

std::string report_to_csv_text(const ExperimentReport& r) {
    std::string out = "t,error,bound_constant\n";
    for (std::size_t i = 0; i < r.t_list.size(); ++i)
        out += fmt(r.t_list[i]) + "," + fmt(r.errors[i]) + "," + fmt(r.bound_constants[i]) + "\n";
    return out;
}

}  // namespace anisoheat
