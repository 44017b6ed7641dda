// Command-line front end: radii, functional tables, falsification
// campaigns, sharpness certificates, and the self-check suite.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bohr/functionals.hpp"
#include "bohr/multidim.hpp"
#include "bohr/radii.hpp"
#include "bohr/series.hpp"
#include "bohr/sharpness.hpp"

namespace {

using namespace bohr;

// BOHR_TRUNCATION overrides the truncation order; fallback if unset.
int truncation_from_env(int fallback) {
    if (const char* env = std::getenv("BOHR_TRUNCATION")) {
        const int m = std::atoi(env);
        if (m >= 1) return m;
    }
    return fallback;
}

struct GridSpec {
    double lo = 0.0, hi = 0.0, step = 0.0;
};

GridSpec parse_grid(const std::string& text) {
    GridSpec g;
    char c1 = 0, c2 = 0;
    std::istringstream is(text);
    if (!(is >> g.lo >> c1 >> g.hi >> c2 >> g.step) || c1 != ':' || c2 != ':' ||
        g.step <= 0.0)
        throw std::invalid_argument("grid must be lo:hi:step with step > 0");
    return g;
}

std::string fmt17(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

radii::RadiusResult radius_by_kind(const std::string& kind, double a, double p,
                                   int N) {
    if (kind == "rp") return radii::radius_r_p(a, p);
    if (kind == "Rnp") return radii::radius_R_Np(N, p);
    if (kind == "Rp") return radii::radius_R_p(p);
    if (kind == "rap") return radii::radius_r_ap(a, p);
    if (kind == "ra2") return radii::radius_r_a2(a);
    if (kind == "classical") {
        radii::RadiusResult res;
        res.kind = "classical";
        res.value = 1.0 / 3.0;
        return res;
    }
    if (kind == "bombieri") {
        radii::RadiusResult res;
        res.kind = "bombieri";
        res.value = 1.0 / std::sqrt(2.0);
        return res;
    }
    throw std::invalid_argument("unknown radius kind: " + kind);
}

int run_table(const std::string& kind, const std::string& a_grid,
              int n_lo, int n_hi, double p, int N, const std::string& out_path,
              bool gnuplot) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open output path: " << out_path << "\n";
        return 1;
    }
    std::ostringstream body;
    if (kind == "kn" || kind == "kn0") {
        body << "n,lower,upper,upper_vacuous\n";
        for (int n = n_lo; n <= n_hi; ++n) {
            const auto b =
                kind == "kn" ? multidim::kn_bounds(n) : multidim::kn0_bounds(n);
            body << n << ',' << fmt17(b.lower) << ',' << fmt17(b.upper) << ','
                 << (b.upper_vacuous ? 1 : 0) << '\n';
        }
    } else {
        body << radii::radius_csv_header() << '\n';
        if (!a_grid.empty()) {
            const auto g = parse_grid(a_grid);
            for (double a = g.lo; a <= g.hi + 1e-15; a += g.step) {
                const auto res = radius_by_kind(kind, a, p, N);
                body << radii::radius_csv_row(res, a, p, N) << '\n';
            }
        }
    }
    out << body.str();
    if (gnuplot) {
        std::ofstream plot(out_path + ".gp", std::ios::binary);
        plot << "set datafile separator ','\n"
             << "set key autotitle columnhead\n"
             << "plot '" << out_path << "' using 2:5 with lines\n";
    }
    return 0;
}

int run_selfcheck(std::uint64_t seed, std::uint64_t trials, std::ostream& os) {
    int failures = 0;
    auto check = [&](const std::string& name, bool ok, const std::string& detail) {
        os << (ok ? "ok   " : "FAIL ") << name << " " << detail << "\n";
        if (!ok) ++failures;
    };

    // radius cross-checks
    {
        const double r11 = radii::radius_R_Np(1, 1).value;
        const double r12 = radii::radius_R_Np(1, 2).value;
        check("radius.R11", std::abs(r11 - (std::sqrt(5.0) - 2.0)) < 1e-10,
              fmt17(r11));
        check("radius.R12", std::abs(r12 - 1.0 / 3.0) < 1e-10, fmt17(r12));
        bool agree = true;
        for (int i = 1; i <= 50; ++i) {
            const double p = 2.0 * i / 50.0;
            if (std::abs(radii::radius_R_p(p).value -
                         radii::radius_R_Np(1, p).value) > 1e-10)
                agree = false;
        }
        check("radius.Rp_cross", agree, "50 p-values");
    }
    // Moebius equality identity on a coarse grid
    {
        bool ok = true;
        double worst = 0.0;
        for (int i = 0; i < 10; ++i) {
            const double a = 0.099 * i;
            const auto f = series::moebius_series(a, 256);
            for (int j = 1; j <= 5; ++j) {
                const double r = 0.15 * j;
                const auto rep = functionals::refined_a_report(f, r);
                const double slack =
                    2.0 * rep.truncation_error + 1e-12;
                worst = std::max(worst, std::abs(rep.margin));
                if (std::abs(rep.margin) > slack) ok = false;
            }
        }
        check("functionals.moebius_identity", ok, fmt17(worst));
    }
    // Psi monotonicity
    {
        bool ok = true;
        for (int N = 1; N <= 3 && ok; ++N) {
            for (double p : {0.5, 1.0, 1.5, 2.0}) {
                const double r = radii::radius_R_Np(N, p).value;
                double prev = radii::psi(N, p, 0.0, r);
                for (int i = 1; i <= 200; ++i) {
                    const double a = i / 200.0;
                    const double v = radii::psi(N, p, a, r);
                    if (v > prev + 1e-10) ok = false;
                    prev = v;
                }
                if (std::abs(radii::psi(N, p, 1.0, r)) > 1e-10) ok = false;
            }
        }
        check("radii.psi_monotone", ok, "(N,p) grid");
    }
    // falsification campaigns (reduced trial counts)
    {
        using functionals::Kind;
        const struct {
            Kind kind;
            double r;
            sharpness::WitnessParams params;
        } cases[] = {
            {Kind::classical, 1.0 / 3.0 - 0.01, {1.0, 1}},
            {Kind::refined_a, 0.5, {1.0, 1}},
            {Kind::refined_b, 1.0 / 3.0 - 0.01, {1.0, 1}},
            {Kind::improved, std::sqrt(5.0) - 2.0 - 0.01, {1.0, 1}},
            {Kind::refined_improved, std::sqrt(5.0) - 2.0 - 0.01, {1.0, 1}},
        };
        for (const auto& c : cases) {
            const auto rep =
                sharpness::falsify_campaign(c.kind, c.r, trials, seed, c.params);
            check("campaign." + rep.kind, rep.violations == 0,
                  "violations=" + std::to_string(rep.violations) +
                      " worst_margin=" + fmt17(rep.worst_margin));
        }
        const auto dr = sharpness::dr_campaign(3, 2.0, trials / 4 + 1, seed);
        check("campaign.dr", dr.violations == 0,
              "violations=" + std::to_string(dr.violations));
        const auto kn0 = sharpness::kn0_campaign(3, trials / 4 + 1, seed);
        check("campaign.kn0", kn0.violations == 0,
              "violations=" + std::to_string(kn0.violations));
    }
    // sharpness bracketing
    {
        using functionals::Kind;
        for (Kind kind : {Kind::classical, Kind::bombieri, Kind::refined_b,
                          Kind::improved, Kind::refined_improved}) {
            sharpness::WitnessParams params;
            const double radius = sharpness::radius_for(kind, params);
            const auto wit = sharpness::find_witness(kind, radius + 0.01, params);
            bool below_errors = false;
            try {
                sharpness::find_witness(kind, radius - 0.01, params);
            } catch (const std::domain_error&) {
                below_errors = true;
            }
            check("sharpness." + functionals::kind_name(kind),
                  wit.found && wit.excess > wit.truncation_error && below_errors,
                  "excess=" + fmt17(wit.excess));
        }
    }
    os << (failures == 0 ? "selfcheck passed\n" : "selfcheck FAILED\n");
    return failures == 0 ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bohr-type radii, refined/improved Bohr functionals, and "
                 "sharpness certification"};
    app.require_subcommand(1);

    std::string kind, format = "json", a_grid, out_path;
    double a = 0.0, p = 1.0, r = 0.0, q = 2.0;
    int N = 1, n = 2, n_lo = 2, n_hi = 16, D = 64, grid = 64;
    std::uint64_t seed = 0, trials = 1000;
    bool gnuplot = false;

    auto* radius_cmd = app.add_subcommand("radius", "compute one radius");
    radius_cmd->add_option("--kind", kind)->required();
    radius_cmd->add_option("--a", a);
    radius_cmd->add_option("--p", p);
    radius_cmd->add_option("--N", N);
    radius_cmd->add_option("--format", format);

    auto* table_cmd = app.add_subcommand("table", "emit a CSV radius table");
    table_cmd->add_option("--kind", kind)->required();
    table_cmd->add_option("--a", a_grid);
    table_cmd->add_option("--n-lo", n_lo);
    table_cmd->add_option("--n-hi", n_hi);
    table_cmd->add_option("--p", p);
    table_cmd->add_option("--N", N);
    table_cmd->add_option("--out", out_path)->required();
    table_cmd->add_flag("--gnuplot", gnuplot);

    auto* verify_cmd =
        app.add_subcommand("verify", "randomized no-violation campaign");
    verify_cmd->add_option("--kind", kind)->required();
    verify_cmd->add_option("--r", r);
    verify_cmd->add_option("--p", p);
    verify_cmd->add_option("--N", N);
    verify_cmd->add_option("--n", n);
    verify_cmd->add_option("--q", q);
    verify_cmd->add_option("--trials", trials);
    verify_cmd->add_option("--seed", seed);

    auto* sharp_cmd =
        app.add_subcommand("sharpness", "extremal witness certificate");
    sharp_cmd->add_option("--kind", kind)->required();
    sharp_cmd->add_option("--r", r)->required();
    sharp_cmd->add_option("--p", p);
    sharp_cmd->add_option("--N", N);

    auto* multi_cmd = app.add_subcommand("multidim", "polydisk computations");
    multi_cmd->require_subcommand(1);
    auto* dr_cmd = multi_cmd->add_subcommand("dr-check",
                                             "coefficient bounds of one sample");
    dr_cmd->add_option("--n", n);
    dr_cmd->add_option("--q", q);
    dr_cmd->add_option("--seed", seed);
    dr_cmd->add_option("--D", D);
    auto* bounds_cmd = multi_cmd->add_subcommand("bounds", "K_n / K_n^0 bounds");
    bounds_cmd->add_option("--kind", kind)->required();
    bounds_cmd->add_option("--n", n)->required();
    auto* extremal_cmd = multi_cmd->add_subcommand(
        "extremal-scan", "majorant of the two-variable extremal on a grid");
    extremal_cmd->add_option("--a", a)->default_val(1.0 / std::sqrt(2.0));
    extremal_cmd->add_option("--D", D)->default_val(200);
    extremal_cmd->add_option("--grid", grid);
    extremal_cmd->add_option("--out", out_path)->required();

    auto* self_cmd = app.add_subcommand("selfcheck", "run the invariant suite");
    self_cmd->add_option("--seed", seed);
    self_cmd->add_option("--trials", trials)->default_val(200);

    CLI11_PARSE(app, argc, argv);

    try {
        if (radius_cmd->parsed()) {
            const auto res = radius_by_kind(kind, a, p, N);
            if (format == "csv")
                std::cout << radii::radius_csv_header() << '\n'
                          << radii::radius_csv_row(res, a, p, N) << '\n';
            else if (format == "human")
                std::cout << res.kind << " = " << fmt17(res.value)
                          << " (residual " << fmt17(res.residual) << ")\n";
            else
                std::cout << res.to_json() << '\n';
            return 0;
        }
        if (table_cmd->parsed())
            return run_table(kind, a_grid, n_lo, n_hi, p, N, out_path, gnuplot);
        if (verify_cmd->parsed()) {
            sharpness::CampaignReport rep;
            if (kind == "dr")
                rep = sharpness::dr_campaign(n, q, trials, seed);
            else if (kind == "kn0")
                rep = sharpness::kn0_campaign(n, trials, seed);
            else
                rep = sharpness::falsify_campaign(
                    functionals::kind_from_name(kind), r, trials, seed, {p, N},
                    truncation_from_env(128));
            std::cout << rep.to_json() << '\n';
            return rep.violations == 0 ? 0 : 2;
        }
        if (sharp_cmd->parsed()) {
            const auto rep = sharpness::find_witness(
                functionals::kind_from_name(kind), r, {p, N});
            std::cout << rep.to_json() << '\n';
            return 0;
        }
        if (dr_cmd->parsed()) {
            multidim::SampleSpec spec;
            spec.degree_cap = D > 16 ? 12 : D;
            const auto F = multidim::sample_polydisk_bounded(n, seed, spec);
            std::cout << multidim::dr_check(F, q).to_json() << '\n';
            return 0;
        }
        if (bounds_cmd->parsed()) {
            const auto b =
                kind == "kn" ? multidim::kn_bounds(n) : multidim::kn0_bounds(n);
            nlohmann::json j;
            j["kind"] = kind;
            j["n"] = n;
            j["lower"] = b.lower;
            j["upper"] = b.upper;
            j["upper_vacuous"] = b.upper_vacuous;
            std::cout << j.dump() << '\n';
            return 0;
        }
        if (extremal_cmd->parsed()) {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) {
                std::cerr << "cannot open output path: " << out_path << "\n";
                return 1;
            }
            const auto F = multidim::two_variable_extremal(a, D);
            out << "r1,r2,full_sum,tail_bound\n";
            for (int i = 1; i <= grid; ++i) {
                const double rr = 0.99 * i / grid;
                const auto sums = multidim::homogeneous_majorants(
                    F, {series::Complex(rr), series::Complex(rr)});
                out << fmt17(rr) << ',' << fmt17(rr) << ','
                    << fmt17(sums.full_sum) << ','
                    << fmt17(multidim::two_variable_extremal_majorant_tail(
                           a, D, rr, rr))
                    << '\n';
            }
            return 0;
        }
        if (self_cmd->parsed()) return run_selfcheck(seed, trials, std::cout);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}
