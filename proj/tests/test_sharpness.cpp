#include <doctest.h>

#include <cmath>

#include "bohr/sharpness.hpp"

using namespace bohr;
using functionals::Kind;
using sharpness::WitnessParams;

TEST_CASE("classical witness past 1/(1+2a)") {
    auto rep = sharpness::find_witness(Kind::classical, 0.34, {});
    CHECK(rep.found);
    // need a > 1/(2r) - 1/2
    CHECK(rep.witness_parameter > 1.0 / (2.0 * 0.34) - 0.5);
    CHECK(rep.functional_value > 1.0);
    CHECK(rep.excess > rep.truncation_error);
}

TEST_CASE("classical witness precondition below 1/3") {
    CHECK_THROWS_AS(sharpness::find_witness(Kind::classical, 0.33, {}),
                    std::domain_error);
}

TEST_CASE("bombieri witness closed form") {
    auto rep = sharpness::find_witness(Kind::bombieri, 0.75, {});
    CHECK(rep.found);
    const double expected =
        (0.75 / std::sqrt(2.0)) / (1.0 - 0.75 / std::sqrt(2.0));
    CHECK(rep.functional_value == doctest::Approx(expected).epsilon(1e-12));
    CHECK(rep.excess == doctest::Approx(expected - 1.0).epsilon(1e-10));
}

TEST_CASE("improved witness exists just past R_Np") {
    for (double p : {1.0, 2.0}) {
        const double radius = radii::radius_R_Np(1, p).value;
        auto rep = sharpness::find_witness(Kind::improved, radius + 0.01, {p, 1});
        CHECK(rep.found);
        CHECK(rep.excess > 0.0);
        CHECK(rep.witness_parameter > 0.5);
    }
}

TEST_CASE("refined-a has no witness by construction") {
    CHECK_THROWS_AS(sharpness::find_witness(Kind::refined_a, 0.9, {}),
                    std::invalid_argument);
}

TEST_CASE("witness excess grows with r for the classical kind") {
    double prev = 0.0;
    for (int i = 1; i <= 6; ++i) {
        const double r = 1.0 / 3.0 + 0.02 * i;
        auto rep = sharpness::find_witness(Kind::classical, r, {});
        CHECK(rep.excess > prev);
        prev = rep.excess;
    }
}

TEST_CASE("tightness bracketing for every certified kind") {
    const struct {
        Kind kind;
        WitnessParams params;
    } cases[] = {
        {Kind::classical, {}},
        {Kind::bombieri, {}},
        {Kind::refined_b, {1.0, 1}},
        {Kind::improved, {1.0, 1}},
        {Kind::improved, {2.0, 1}},
        {Kind::refined_improved, {1.0, 1}},
    };
    for (const auto& c : cases) {
        const double radius = sharpness::radius_for(c.kind, c.params);
        auto above = sharpness::find_witness(c.kind, radius + 0.01, c.params);
        CHECK(above.found);
        CHECK(above.excess > above.truncation_error);
        CHECK_THROWS_AS(sharpness::find_witness(c.kind, radius - 0.01, c.params),
                        std::domain_error);
    }
}

TEST_CASE("campaigns find no violations below the radius") {
    auto rep = sharpness::falsify_campaign(Kind::refined_a, 0.5, 200, 42, {});
    CHECK(rep.violations == 0);
    CHECK(rep.worst_margin >= -1e-12);

    auto imp = sharpness::falsify_campaign(Kind::improved, 0.22, 200, 7,
                                           {1.0, 1});
    CHECK(imp.violations == 0);
}

TEST_CASE("campaign precondition near the radius") {
    CHECK_THROWS_AS(
        sharpness::falsify_campaign(Kind::improved, 0.5, 10, 1, {1.0, 1}),
        std::domain_error);
}

TEST_CASE("campaigns are deterministic in the seed") {
    auto a = sharpness::falsify_campaign(Kind::refined_b, 0.3, 100, 99, {1.0, 1});
    auto b = sharpness::falsify_campaign(Kind::refined_b, 0.3, 100, 99, {1.0, 1});
    CHECK(a.to_json() == b.to_json());
    auto c = sharpness::falsify_campaign(Kind::refined_b, 0.3, 100, 98, {1.0, 1});
    CHECK(a.worst_margin != c.worst_margin);
}

TEST_CASE("multidim campaigns") {
    auto dr = sharpness::dr_campaign(2, 2.0, 100, 1);
    CHECK(dr.violations == 0);
    auto kn0 = sharpness::kn0_campaign(3, 100, 1);
    CHECK(kn0.violations == 0);
    CHECK(kn0.r == doctest::Approx(1.0 / std::sqrt(6.0)));
}
