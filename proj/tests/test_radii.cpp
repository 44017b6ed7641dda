#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "bohr/radii.hpp"

using namespace bohr::radii;

TEST_CASE("r_p closed form") {
    CHECK(radius_r_p(0.5, 1.0).value == doctest::Approx(0.4).epsilon(1e-14));
    CHECK(radius_r_p(0.37, 2.0).value == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(radius_r_p(0.0, 1.0).value == doctest::Approx(0.5).epsilon(1e-14));
    CHECK_THROWS_AS(radius_r_p(1.0, 1.0), std::domain_error);
}

TEST_CASE("equation_A endpoint values") {
    for (double a : {0.0, 0.3, 0.9}) {
        for (double p : {0.5, 1.0, 2.0}) {
            CHECK(equation_A(a, p, 0.0) ==
                  doctest::Approx(1.0 - std::pow(a, p)).epsilon(1e-14));
            CHECK(equation_A(a, p, 1.0) ==
                  doctest::Approx((a * a - 1.0) * std::pow(1.0 + a, p))
                      .epsilon(1e-12));
        }
    }
    CHECK(equation_A(0.0, 2.0, 0.5) == doctest::Approx(-0.125));
}

TEST_CASE("R_Np roots match the remark values") {
    auto r11 = radius_R_Np(1, 1.0);
    CHECK(r11.value == doctest::Approx(std::sqrt(5.0) - 2.0).epsilon(1e-12));
    CHECK(r11.residual <= 1e-12);
    CHECK(r11.method == Method::bisection);

    auto r12 = radius_R_Np(1, 2.0);
    CHECK(r12.value == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

    // N=2, p=1: root of 2r^3 + 2r^2 ... i.e. 2(1+r)r^2 - (1-r)^2 = 0
    auto r21 = radius_R_Np(2, 1.0);
    CHECK(r21.value == doctest::Approx(0.37604).epsilon(1e-4));
    const double g = 2.0 * (1.0 + r21.value) * r21.value * r21.value -
                     (1.0 - r21.value) * (1.0 - r21.value);
    CHECK(std::abs(g) <= 1e-12);
}

TEST_CASE("R_p closed form against bisection") {
    CHECK(radius_R_p(1.0).value ==
          doctest::Approx(std::sqrt(5.0) - 2.0).epsilon(1e-12));
    CHECK(radius_R_p(2.0).value == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(radius_R_p(0.5).value ==
          doctest::Approx(0.5 / (std::sqrt(3.0) + 1.5)).epsilon(1e-14));
    for (int i = 1; i <= 50; ++i) {
        const double p = 2.0 * i / 50.0;
        CHECK(std::abs(radius_R_p(p).value - radius_R_Np(1, p).value) < 1e-10);
    }
}

TEST_CASE("r_ap matches the p=1 closed form") {
    for (int i = 0; i < 100; ++i) {
        const double a = i / 100.0;
        const double closed = 2.0 / (3.0 + a + std::sqrt(5.0) * (1.0 + a));
        CHECK(std::abs(radius_r_ap(a, 1.0).value - closed) < 1e-10);
    }
}

TEST_CASE("r_ap p=2 and the cubic agree") {
    auto r0 = radius_r_ap(0.0, 2.0);
    CHECK(r0.value == doctest::Approx(0.44504).epsilon(1e-4));
    for (double a : {0.0, 0.25, 0.5, 0.75, 0.99}) {
        CHECK(std::abs(radius_r_ap(a, 2.0).value - radius_r_a2(a).value) < 1e-10);
    }
    // bound sandwich 1/3 < r_{a,2} < 1/(2+a)
    for (int i = 0; i < 100; ++i) {
        const double a = 0.99 * i / 100.0;
        const double v = radius_r_a2(a).value;
        CHECK(v > 1.0 / 3.0);
        CHECK(v < 1.0 / (2.0 + a));
    }
}

TEST_CASE("single sign change before the returned r_ap root") {
    for (double a : {0.0, 0.4, 0.8}) {
        for (double p : {0.7, 1.0, 2.0, 3.5}) {
            const double root = radius_r_ap(a, p).value;
            // A stays positive on the scan grid strictly before the root
            for (double rr = 0.0; rr < root - 1e-3; rr += 1e-3)
                CHECK(equation_A(a, p, rr) > 0.0);
        }
    }
}

TEST_CASE("psi values and monotonicity") {
    CHECK(psi(1, 1.0, 1.0, 0.4) == doctest::Approx(0.0));
    CHECK(psi(3, 2.0, 1.0, 0.7) == doctest::Approx(0.0));
    CHECK(psi(1, 1.0, 0.0, 0.2) == doctest::Approx(0.55).epsilon(1e-12));
    const double r12 = radius_R_Np(1, 2.0).value;
    CHECK(psi(1, 2.0, 0.5, r12) >= 0.0);

    for (int N : {1, 2, 3}) {
        for (double p : {0.5, 1.0, 1.5, 2.0}) {
            const double r = radius_R_Np(N, p).value;
            double prev = psi(N, p, 0.0, r);
            for (int i = 1; i <= 200; ++i) {
                const double a = i / 200.0;
                const double v = psi(N, p, a, r);
                CHECK(v <= prev + 1e-10);
                prev = v;
            }
        }
    }
}

TEST_CASE("q_sharpness limit vanishes exactly at R_Np") {
    const double r = std::sqrt(5.0) - 2.0;
    CHECK(std::abs(q_sharpness_limit(1, 1.0, r)) < 1e-12);
    CHECK(q_sharpness_limit(1, 1.0, 0.3) > 0.0);
    // continuity of the finite-a formula toward the limit
    CHECK(std::abs(q_sharpness(1, 2.0, 0.999, 0.34) -
                   q_sharpness_limit(1, 2.0, 0.34)) < 1e-2);
    CHECK_THROWS_AS(q_sharpness(1, 1.0, 1.0, 0.4), std::domain_error);
}

TEST_CASE("infimum scans approach the stated limits") {
    auto rp = infimum_scan(ScanKind::r_p, 1.0, 1000);
    CHECK(rp.inf_value == doctest::Approx(1.0 / 3.0).epsilon(1e-3));
    CHECK(rp.argmin_a > 0.99);

    auto rap = infimum_scan(ScanKind::r_ap, 1.0, 300);
    CHECK(rap.inf_value == doctest::Approx(std::sqrt(5.0) - 2.0).epsilon(1e-3));

    auto ra2 = infimum_scan(ScanKind::r_a2, 2.0, 300);
    CHECK(ra2.inf_value == doctest::Approx(1.0 / 3.0).epsilon(1e-3));

    CHECK_THROWS_AS(infimum_scan(ScanKind::r_p, 1.0, 10), std::invalid_argument);
}

TEST_CASE("bisect guards") {
    CHECK_THROWS_AS(bisect([](double x) { return x + 2.0; }, 0.0, 1.0),
                    std::invalid_argument);
    const double root = bisect([](double x) { return x * x - 2.0; }, 0.0, 2.0);
    CHECK(root == doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));
}
