#include "bohr/sharpness.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "bohr/multidim.hpp"

namespace bohr::sharpness {

namespace {

constexpr double kGoldenTol = 1e-10;
constexpr double kSearchLo = 0.5;
constexpr double kSearchHi = 1.0 - 1e-8;

// Golden-section maximization of a unimodal function on [lo, hi].
double golden_max(const std::function<double(double)>& f, double lo, double hi) {
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double x1 = b - phi * (b - a);
    double x2 = a + phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > kGoldenTol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

std::string moebius_label(double a) {
    std::ostringstream os;
    os << "moebius(a=" << a << ")";
    return os.str();
}

// Closed-form excess of the chosen witness family over its bound,
// as a function of the Moebius parameter a.
std::function<double(double)> witness_excess(Kind kind, double r,
                                             const WitnessParams& params) {
    switch (kind) {
    case Kind::classical:
        // B(phi_a, r) = a + (1-a^2) r/(1-ar)
        return [r](double a) {
            return a + (1.0 - a * a) * r / (1.0 - a * r) - 1.0;
        };
    case Kind::refined_b:
        // equality value of phi_a: a^p + (1-a^2) r/(1-r)
        return [r, p = params.p](double a) {
            return std::pow(a, p) + (1.0 - a * a) * r / (1.0 - r) - 1.0;
        };
    case Kind::improved:
        // |phi_a(-r)|^p + B_N(phi_a, r)
        return [r, p = params.p, N = params.N](double a) {
            return std::pow((r + a) / (1.0 + r * a), p) +
                   (1.0 - a * a) * std::pow(a, N - 1) * std::pow(r, N) /
                       (1.0 - a * r) -
                   1.0;
        };
    case Kind::refined_improved:
        // equality value of phi_a at z = -r
        return [r, p = params.p](double a) {
            return std::pow((r + a) / (1.0 + r * a), p) +
                   (1.0 - a * a) * r / (1.0 - r) - 1.0;
        };
    default:
        throw std::invalid_argument("no Moebius witness family for this kind");
    }
}

} // namespace

std::uint64_t derive_trial_seed(std::uint64_t seed, std::uint64_t trial) {
    // splitmix64 over the combined state
    std::uint64_t x = seed + 0x9E3779B97F4A7C15ULL * (trial + 1);
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

series::CoefficientSeries sample_schur_class(std::uint64_t seed, int M,
                                             bool zero_constant) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto disk_point = [&](double radius) {
        const double rho = radius * std::sqrt(unit(rng));
        const double phi = 2.0 * M_PI * unit(rng);
        return std::polar(rho, phi);
    };
    std::uniform_int_distribution<int> count_dist(1, 8);
    const bool use_blaschke = (rng() & 1u) == 0 && !zero_constant;
    if (use_blaschke) {
        const int count = count_dist(rng);
        std::vector<series::Complex> zeros;
        zeros.reserve(static_cast<size_t>(count));
        for (int i = 0; i < count; ++i) zeros.push_back(disk_point(0.9));
        const double rot = 2.0 * M_PI * unit(rng);
        return series::blaschke_series(zeros, rot, M);
    }
    const int depth = count_dist(rng);
    std::vector<series::Complex> params;
    if (zero_constant) params.push_back(0.0);
    for (int i = 0; i < depth; ++i) params.push_back(disk_point(0.95));
    return series::schur_series(params, M);
}

double radius_for(Kind kind, const WitnessParams& params) {
    switch (kind) {
    case Kind::classical:
        return 1.0 / 3.0;
    case Kind::refined_a:
        return 1.0; // Theorem A(a) holds on the whole disk
    case Kind::refined_b:
        // uniform over a: inf r_p(a) = p/(2+p) for p in (0,2]
        if (params.p > 2.0)
            throw std::invalid_argument(
                "no uniform radius is known for refined-b with p > 2");
        return params.p / (2.0 + params.p);
    case Kind::bombieri:
        return 1.0 / std::sqrt(2.0);
    case Kind::improved:
        return radii::radius_R_Np(params.N, params.p).value;
    case Kind::refined_improved:
        if (params.p > 2.0)
            throw std::invalid_argument(
                "no uniform radius is known for refined-improved with p > 2");
        return radii::radius_R_p(params.p).value;
    }
    throw std::invalid_argument("unknown kind");
}

WitnessReport find_witness(Kind kind, double r, const WitnessParams& params) {
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("r must lie in (0,1)");
    if (kind == Kind::refined_a)
        throw std::invalid_argument(
            "refined-a holds for every r in [0,1); no witness exists");
    const double radius = radius_for(kind, params);
    if (r <= radius)
        throw std::domain_error(
            "no witness exists by the theorem: r does not exceed the radius");

    WitnessReport rep;
    rep.kind = kind;
    rep.r = r;
    rep.rhs = 1.0;
    rep.truncation_error = 0.0; // closed-form families throughout

    if (kind == Kind::bombieri) {
        // psi with a = 1/sqrt(2): majorant sum (r/sqrt2)/(1 - r/sqrt2)
        const double s = r / std::sqrt(2.0);
        rep.witness = "shifted_moebius(a=1/sqrt(2))";
        rep.witness_parameter = 1.0 / std::sqrt(2.0);
        rep.functional_value = s / (1.0 - s);
        rep.excess = rep.functional_value - rep.rhs;
        rep.found = rep.excess > rep.truncation_error;
        return rep;
    }

    const auto excess = witness_excess(kind, r, params);
    const double a = golden_max(excess, kSearchLo, kSearchHi);
    const double e = excess(a);
    rep.witness_parameter = a;
    rep.witness = moebius_label(a);
    rep.functional_value = rep.rhs + e;
    rep.excess = e;
    rep.found = e > rep.truncation_error;
    if (!rep.found) rep.witness = "not-found";
    return rep;
}

CampaignReport falsify_campaign(Kind kind, double r, std::uint64_t trials,
                                std::uint64_t seed,
                                const WitnessParams& params,
                                int truncation_order) {
    if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("r must lie in [0,1)");
    const double radius = radius_for(kind, params);
    if (!(r <= radius - 1e-3 + 1e-12))
        throw std::domain_error(
            "campaign requires r at least 1e-3 below the kind's radius");

    CampaignReport rep;
    rep.kind = functionals::kind_name(kind);
    rep.r = r;
    rep.trials = trials;
    rep.seed = seed;
    rep.p = params.p;
    rep.N = params.N;
    rep.worst_margin = std::numeric_limits<double>::infinity();

    for (std::uint64_t t = 0; t < trials; ++t) {
        const auto f = sample_schur_class(derive_trial_seed(seed, t),
                                          truncation_order,
                                          kind == Kind::bombieri);
        functionals::FunctionalReport fr;
        switch (kind) {
        case Kind::classical:
            fr = functionals::classical_report(f, r);
            break;
        case Kind::refined_a:
            fr = functionals::refined_a_report(f, r);
            break;
        case Kind::refined_b:
            fr = functionals::refined_b_report(f, r, params.p);
            break;
        case Kind::bombieri:
            fr = functionals::bombieri_report(f, r);
            break;
        case Kind::improved:
            fr = functionals::improved_report(f, series::Complex(-r, 0.0),
                                              params.p, params.N);
            break;
        case Kind::refined_improved:
            fr = functionals::refined_improved_report(
                f, series::Complex(-r, 0.0), params.p);
            break;
        }
        if (fr.margin < rep.worst_margin) rep.worst_margin = fr.margin;
        if (fr.margin < -(fr.truncation_error + 1e-12)) ++rep.violations;
    }
    return rep;
}

CampaignReport dr_campaign(int n, double q, std::uint64_t trials,
                           std::uint64_t seed, int degree_cap) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (!(q >= 2.0)) throw std::invalid_argument("q must be >= 2");
    CampaignReport rep;
    rep.kind = "dr";
    rep.trials = trials;
    rep.seed = seed;
    rep.n = n;
    rep.q = q;
    rep.worst_margin = std::numeric_limits<double>::infinity();
    for (std::uint64_t t = 0; t < trials; ++t) {
        multidim::SampleSpec spec;
        spec.construction = (t & 1u) == 0
                                ? multidim::SampleConstruction::line_composition
                                : multidim::SampleConstruction::factor_product;
        spec.degree_cap = degree_cap;
        const auto F =
            multidim::sample_polydisk_bounded(n, derive_trial_seed(seed, t), spec);
        const auto dr = multidim::dr_check(F, q);
        const double margin = dr.rhs - dr.lhs_sum;
        if (margin < rep.worst_margin) rep.worst_margin = margin;
        bool ok = dr.sum_ok;
        for (bool b : dr.per_k_ok) ok = ok && b;
        if (!ok) ++rep.violations;
    }
    return rep;
}

CampaignReport kn0_campaign(int n, std::uint64_t trials, std::uint64_t seed,
                            int degree_cap) {
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    CampaignReport rep;
    rep.kind = "kn0";
    rep.trials = trials;
    rep.seed = seed;
    rep.n = n;
    rep.r = 1.0 / std::sqrt(2.0 * n);
    rep.worst_margin = std::numeric_limits<double>::infinity();
    for (std::uint64_t t = 0; t < trials; ++t) {
        const std::uint64_t ts = derive_trial_seed(seed, t);
        multidim::SampleSpec spec;
        spec.construction = multidim::SampleConstruction::line_composition;
        spec.degree_cap = degree_cap;
        spec.force_zero_constant = true;
        const auto F = multidim::sample_polydisk_bounded(n, ts, spec);
        // random point on the closed polydisk of radius 1/sqrt(2n)
        std::mt19937_64 rng(ts ^ 0xA5A5A5A5A5A5A5A5ULL);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        std::vector<series::Complex> z;
        z.reserve(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j)
            z.push_back(std::polar(rep.r * unit(rng), 2.0 * M_PI * unit(rng)));
        const auto sums = multidim::homogeneous_majorants(F, z);
        const double margin = 1.0 - sums.full_sum;
        if (margin < rep.worst_margin) rep.worst_margin = margin;
        if (margin < -1e-10) ++rep.violations;
    }
    return rep;
}

std::string WitnessReport::to_json() const {
    nlohmann::json j;
    j["kind"] = functionals::kind_name(kind);
    j["r"] = r;
    j["found"] = found;
    j["witness"] = witness;
    j["witness_parameter"] = witness_parameter;
    j["functional_value"] = functional_value;
    j["rhs"] = rhs;
    j["excess"] = excess;
    j["truncation_error"] = truncation_error;
    return j.dump();
}

std::string CampaignReport::to_json() const {
    nlohmann::json j;
    j["kind"] = kind;
    j["r"] = r;
    j["trials"] = trials;
    j["seed"] = seed;
    j["violations"] = violations;
    j["worst_margin"] = worst_margin;
    if (p > 0.0) j["p"] = p;
    if (N > 0) j["N"] = N;
    if (n > 0) j["n"] = n;
    if (q > 0.0) j["q"] = q;
    return j.dump();
}

} // namespace bohr::sharpness
