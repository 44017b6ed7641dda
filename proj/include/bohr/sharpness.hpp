#ifndef BOHR_SHARPNESS_HPP
#define BOHR_SHARPNESS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "bohr/functionals.hpp"
#include "bohr/radii.hpp"

namespace bohr::sharpness {

using functionals::Kind;

struct WitnessParams {
    double p = 1.0;
    int N = 1;
};

// Sharpness certificate: an explicit function from the extremal family
// whose functional value exceeds the bound at the given r.
struct WitnessReport {
    Kind kind = Kind::classical;
    double r = 0.0;
    bool found = false;
    std::string witness;           // e.g. "moebius(a=0.97)"
    double witness_parameter = 0.0; // a for Moebius-family witnesses
    double functional_value = 0.0;
    double rhs = 1.0;
    double excess = 0.0; // functional_value - rhs
    double truncation_error = 0.0;

    std::string to_json() const;
};

struct CampaignReport {
    std::string kind;
    double r = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::uint64_t violations = 0;
    double worst_margin = 0.0;
    double p = 0.0;
    int N = 0;
    int n = 0;    // dimension, multidim campaigns only
    double q = 0.0; // Djakov-Ramanujan exponent

    std::string to_json() const;
};

// The radius below which the theorem guarantees the inequality, uniform
// over the initial coefficient.
double radius_for(Kind kind, const WitnessParams& params);

// Find an extremal witness beating the bound at r (requires r above the
// kind's radius). A not-found report is returned if the search over
// a in [0.5, 1-1e-8] cannot certify an excess.
WitnessReport find_witness(Kind kind, double r, const WitnessParams& params);

// Randomized no-violation campaign at r below the kind's radius.
// Deterministic given (kind, r, trials, seed).
CampaignReport falsify_campaign(Kind kind, double r, std::uint64_t trials,
                                std::uint64_t seed,
                                const WitnessParams& params,
                                int truncation_order = 128);

// Djakov-Ramanujan coefficient-bound campaign over polydisk samples.
CampaignReport dr_campaign(int n, double q, std::uint64_t trials,
                           std::uint64_t seed, int degree_cap = 12);

// K_n^0 >= 1/sqrt(2n) mechanism: full majorant sum of f(0)=0 samples
// stays <= 1 inside the polydisk of radius 1/sqrt(2n).
CampaignReport kn0_campaign(int n, std::uint64_t trials, std::uint64_t seed,
                            int degree_cap = 12);

// Per-trial RNG stream seed, independent of scheduling.
std::uint64_t derive_trial_seed(std::uint64_t seed, std::uint64_t trial);

// Seed-deterministic one-variable sampler (Schur/Blaschke mix).
series::CoefficientSeries sample_schur_class(std::uint64_t seed, int M,
                                             bool zero_constant = false);

} // namespace bohr::sharpness

#endif
