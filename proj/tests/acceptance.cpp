// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bohr/functionals.hpp"
#include "bohr/multidim.hpp"
#include "bohr/radii.hpp"
#include "bohr/series.hpp"
#include "bohr/sharpness.hpp"

using namespace bohr;
using functionals::Kind;
using series::Complex;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(const std::string& name, bool ok, double elapsed_s,
            double limit_s, const std::string& detail) {
    const bool in_time = elapsed_s <= limit_s;
    std::cout << (ok && in_time ? "PASS " : "FAIL ") << name << "  " << detail
              << "  [" << elapsed_s << "s / limit " << limit_s << "s]\n";
    if (!(ok && in_time)) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void criterion_1_radius_cross_checks() {
    const auto t0 = Clock::now();
    bool ok = std::abs(radii::radius_R_Np(1, 1.0).value -
                       (std::sqrt(5.0) - 2.0)) < 1e-10;
    ok = ok && std::abs(radii::radius_R_Np(1, 2.0).value - 1.0 / 3.0) < 1e-10;
    double worst = 0.0;
    for (int i = 1; i <= 50; ++i) {
        const double p = 2.0 * i / 50.0;
        const double diff =
            std::abs(radii::radius_R_p(p).value - radii::radius_R_Np(1, p).value);
        worst = std::max(worst, diff);
    }
    ok = ok && worst < 1e-10;
    std::ostringstream d;
    d << "worst closed-form/bisection gap " << worst;
    report("1.radius-cross-checks", ok, seconds_since(t0), 1.0, d.str());
}

void criterion_2_closed_form_identities() {
    const auto t0 = Clock::now();
    bool ok = true;
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double a = 0.99 * i / 100.0;
        const double closed = 2.0 / (3.0 + a + std::sqrt(5.0) * (1.0 + a));
        worst = std::max(worst,
                         std::abs(radii::radius_r_ap(a, 1.0).value - closed));
        if (std::abs(radii::radius_r_p(a, 1.0).value - 1.0 / (2.0 + a)) > 1e-14)
            ok = false;
        if (std::abs(radii::radius_r_p(a, 2.0).value - 0.5) > 1e-14) ok = false;
    }
    ok = ok && worst < 1e-10;
    std::ostringstream d;
    d << "worst r_ap gap " << worst;
    report("2.closed-form-identities", ok, seconds_since(t0), 1.0, d.str());
}

void criterion_3_infimum_limits() {
    const auto t0 = Clock::now();
    const double rp999 = radii::radius_r_p(0.999, 1.0).value;
    bool ok = std::abs(rp999 - 1.0 / 3.0) < 2e-3;
    const auto rap = radii::infimum_scan(radii::ScanKind::r_ap, 1.0, 200);
    ok = ok && std::abs(rap.inf_value - (std::sqrt(5.0) - 2.0)) < 2e-3;
    const auto ra2 = radii::infimum_scan(radii::ScanKind::r_a2, 2.0, 200);
    ok = ok && std::abs(ra2.inf_value - 1.0 / 3.0) < 2e-3;
    std::ostringstream d;
    d << "r_p(0.999)=" << rp999 << " inf r_a1=" << rap.inf_value
      << " inf r_a2=" << ra2.inf_value;
    report("3.infimum-limits", ok, seconds_since(t0), 1.0, d.str());
}

void criterion_4_moebius_equality() {
    const auto t0 = Clock::now();
    bool ok = true;
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double a = 0.99 * i / 100.0;
        const auto f = series::moebius_series(a, 512);
        for (int j = 1; j <= 9; ++j) {
            const double r = 0.1 * j;
            const auto rep = functionals::refined_a_report(f, r);
            // floating-point floor: the truncation error underflows the
            // double-precision summation noise at M = 512
            const double tol = std::max(2.0 * rep.truncation_error, 2e-12);
            worst = std::max(worst, std::abs(rep.margin));
            if (std::abs(rep.margin) > tol) ok = false;
        }
    }
    std::ostringstream d;
    d << "worst |margin| " << worst;
    report("4.moebius-equality", ok, seconds_since(t0), 10.0, d.str());
}

void criterion_5_psi_monotonicity() {
    const auto t0 = Clock::now();
    bool ok = true;
    for (int N : {1, 2, 3}) {
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
    report("5.psi-monotonicity", ok, seconds_since(t0), 1.0,
           "12 (N,p) pairs, 201-point grids");
}

void criterion_6_sharpness_bracketing() {
    const auto t0 = Clock::now();
    const struct {
        Kind kind;
        sharpness::WitnessParams params;
        const char* name;
    } cases[] = {
        {Kind::classical, {1.0, 1}, "classical"},
        {Kind::bombieri, {1.0, 1}, "bombieri"},
        {Kind::refined_b, {1.0, 1}, "refined-b(p=1)"},
        {Kind::improved, {1.0, 1}, "improved(1,1)"},
        {Kind::improved, {2.0, 1}, "improved(1,2)"},
        {Kind::refined_improved, {1.0, 1}, "refined-improved(p=1)"},
    };
    bool ok = true;
    std::ostringstream d;
    for (const auto& c : cases) {
        const double radius = sharpness::radius_for(c.kind, c.params);
        bool case_ok = false;
        try {
            const auto above =
                sharpness::find_witness(c.kind, radius + 0.01, c.params);
            if (above.found && above.excess > above.truncation_error) {
                try {
                    sharpness::find_witness(c.kind, radius - 0.01, c.params);
                } catch (const std::domain_error&) {
                    case_ok = true;
                }
            }
        } catch (const std::exception&) {
        }
        if (!case_ok) {
            ok = false;
            d << c.name << " failed; ";
        }
    }
    if (ok) d << "6 kinds bracketed at +-0.01";
    report("6.sharpness-bracketing", ok, seconds_since(t0), 30.0, d.str());
}

void criterion_7_falsification_campaigns() {
    const auto t0 = Clock::now();
    bool ok = true;
    std::ostringstream d;
    const std::uint64_t trials = 10000;
    const struct {
        Kind kind;
        double r;
        sharpness::WitnessParams params;
    } cases[] = {
        {Kind::classical, 1.0 / 3.0 - 1e-3, {1.0, 1}},
        {Kind::refined_a, 0.5, {1.0, 1}},
        {Kind::refined_b, 1.0 / 3.0 - 1e-3, {1.0, 1}},
        {Kind::bombieri, 1.0 / std::sqrt(2.0) - 1e-3, {1.0, 1}},
        {Kind::improved, std::sqrt(5.0) - 2.0 - 1e-3, {1.0, 1}},
        {Kind::improved, 1.0 / 3.0 - 1e-3, {2.0, 1}},
        {Kind::refined_improved, std::sqrt(5.0) - 2.0 - 1e-3, {1.0, 1}},
    };
    for (const auto& c : cases) {
        const auto rep =
            sharpness::falsify_campaign(c.kind, c.r, trials, 42, c.params);
        if (rep.violations != 0) {
            ok = false;
            d << rep.kind << " violations=" << rep.violations << "; ";
        }
    }
    for (int n : {2, 3, 4}) {
        for (double q : {2.0, 3.0, 4.0}) {
            const auto rep = sharpness::dr_campaign(n, q, 1000, 42);
            if (rep.violations != 0) {
                ok = false;
                d << "dr(n=" << n << ",q=" << q << ") violations="
                  << rep.violations << "; ";
            }
        }
        const auto kn0 = sharpness::kn0_campaign(n, 1000, 42);
        if (kn0.violations != 0) {
            ok = false;
            d << "kn0(n=" << n << ") violations=" << kn0.violations << "; ";
        }
    }
    if (ok) d << "0 violations across all campaigns";
    report("7.falsification-campaigns", ok, seconds_since(t0), 300.0, d.str());
}

void criterion_8_two_variable_extremal() {
    const auto t0 = Clock::now();
    const double a = 1.0 / std::sqrt(2.0);
    const auto F = multidim::two_variable_extremal(a, 200);
    const auto sums =
        multidim::homogeneous_majorants(F, {Complex(0.75), Complex(0.75)});
    const double tail =
        multidim::two_variable_extremal_majorant_tail(a, 200, 0.75, 0.75);
    const double expected = 0.75 / (std::sqrt(2.0) - 0.75);
    bool ok = sums.full_sum > 1.0 &&
              std::abs(sums.full_sum - expected) < 1e-3 + tail;
    for (int i = 1; i <= 25 && ok; ++i) {
        const double r = (a - 1e-6) * i / 25.0;
        const auto inside =
            multidim::homogeneous_majorants(F, {Complex(r), Complex(r)});
        if (inside.full_sum > 1.0 + 1e-10) ok = false;
    }
    std::ostringstream d;
    d << "full_sum(0.75,0.75)=" << sums.full_sum << " expected " << expected;
    report("8.two-variable-extremal", ok, seconds_since(t0), 5.0, d.str());
}

void criterion_9_bound_tables() {
    const auto t0 = Clock::now();
    bool ok = true;
    double prev_kn = 2.0, prev_kn0 = 2.0;
    for (int n = 2; n <= 1024; ++n) {
        const auto kn = multidim::kn_bounds(n);
        const auto kn0 = multidim::kn0_bounds(n);
        // lower bounds decay monotonically in n
        if (kn.lower > prev_kn + 1e-15 || kn0.lower > prev_kn0 + 1e-15)
            ok = false;
        prev_kn = kn.lower;
        prev_kn0 = kn0.lower;
        if (kn.upper >= 1.0 && !kn.upper_vacuous) ok = false;
    }
    const auto b100 = multidim::kn_bounds(100);
    const double exact100 = 2.0 * std::sqrt(std::log(100.0)) / 10.0;
    ok = ok && std::abs(b100.upper - exact100) < 1e-12;
    ok = ok && std::abs(b100.upper - 0.42918) < 2e-5;
    ok = ok && multidim::kn_bounds(2).upper_vacuous;
    std::ostringstream d;
    d << "kn(100).upper=" << b100.upper;
    report("9.bound-tables", ok, seconds_since(t0), 1.0, d.str());
}

void criterion_10_selfcheck_determinism() {
    const auto t0 = Clock::now();
    const char* cli = std::getenv("BOHR_CLI");
    bool ok = false;
    std::string detail;
    if (cli == nullptr) {
        detail = "BOHR_CLI not set";
    } else {
        const std::string base = std::string(cli) + " selfcheck --seed 42 --trials 100 > ";
        const std::string f1 = "selfcheck_run1.txt", f2 = "selfcheck_run2.txt";
        const int rc1 = std::system((base + f1).c_str());
        const int rc2 = std::system((base + f2).c_str());
        std::ifstream s1(f1, std::ios::binary), s2(f2, std::ios::binary);
        std::stringstream b1, b2;
        b1 << s1.rdbuf();
        b2 << s2.rdbuf();
        ok = rc1 == 0 && rc2 == 0 && !b1.str().empty() && b1.str() == b2.str();
        detail = ok ? "byte-identical selfcheck reports"
                    : "reports differ or selfcheck failed";
    }
    report("10.selfcheck-determinism", ok, seconds_since(t0), 120.0, detail);
}

} // namespace

int main() {
    criterion_1_radius_cross_checks();
    criterion_2_closed_form_identities();
    criterion_3_infimum_limits();
    criterion_4_moebius_equality();
    criterion_5_psi_monotonicity();
    criterion_6_sharpness_bracketing();
    criterion_7_falsification_campaigns();
    criterion_8_two_variable_extremal();
    criterion_9_bound_tables();
    criterion_10_selfcheck_determinism();
    std::cout << (g_failures == 0 ? "ALL CRITERIA PASSED\n"
                                  : "FAILURES: " + std::to_string(g_failures) + "\n");
    return g_failures == 0 ? 0 : 1;
}
