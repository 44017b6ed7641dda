#ifndef BOHR_MULTIDIM_HPP
#define BOHR_MULTIDIM_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bohr/series.hpp"

namespace bohr::multidim {

using series::CoefficientSeries;
using series::Complex;

using MultiIndex = std::vector<int>;

// Default total-degree cap for multivariate objects.
inline constexpr int kDefaultDegreeCap = 64;

// Sparse multi-index coefficient table of a holomorphic function on the
// polydisk, with homogeneous slices by total degree.
struct MultiSeries {
    int dimension = 1;
    int max_degree = 0;
    std::map<MultiIndex, Complex> coeffs;
    std::string tail_note; // provenance of the truncation bound, if any

    Complex at(const MultiIndex& alpha) const;
    void set(const MultiIndex& alpha, Complex c);
    Complex constant_term() const;
    // all (alpha, c) with |alpha| = k
    std::vector<std::pair<MultiIndex, Complex>> slice(int k) const;

    std::string to_json() const;
    static MultiSeries from_json(const std::string& text);
};

struct MajorantSums {
    double slice_sum = 0.0; // sum_k |P_k(z)|
    double full_sum = 0.0;  // sum_k sum_{|alpha|=k} |c_alpha z^alpha|
    double quad_sum = 0.0;  // sum_k |P_k(z)|^2
};

struct DRReport {
    std::vector<double> b_k; // k = 1..D
    double q = 2.0;
    double lhs_sum = 0.0;             // sum b_k^q
    double rhs = 1.0;                 // (1 - |c_0|^2)^{q-1}
    std::vector<bool> per_k_ok;       // b_k <= 1 - |c_0|^2
    bool sum_ok = true;

    std::string to_json() const;
    static std::string csv_header();
    std::string csv_row(int n, std::uint64_t seed) const;
};

struct BoundPair {
    double lower = 0.0;
    double upper = 0.0;
    bool upper_vacuous = false; // clipped at 1
};

// Restriction f(a t) = sum_k P_k(a) t^k along the complex line {a t}.
CoefficientSeries restrict_to_line(const MultiSeries& F,
                                   const std::vector<Complex>& direction,
                                   double tail_coeff_bound = 0.0);

MajorantSums homogeneous_majorants(const MultiSeries& F,
                                   const std::vector<Complex>& z);

// Djakov-Ramanujan coefficient bounds: b_k <= 1 - |c_0|^2 and
// sum b_k^q <= (1 - |c_0|^2)^{q-1} for q >= 2.
DRReport dr_check(const MultiSeries& F, double q);

// Polydisk Bohr radius bounds: 1/(3 sqrt n) < K_n < 2 sqrt(log n)/sqrt(n).
BoundPair kn_bounds(int n);

// Bounds for the f(0) = 0 variant: K_n^0 >= 1/sqrt(2n); upper bound
// 1/sqrt(2) for n = 2 and 2 sqrt(log n)/sqrt(n) for n > 2.
BoundPair kn0_bounds(int n);

// sqrt(n r^2 / (1 - n r^2)), the Cauchy-Schwarz majorant envelope.
double majorant_envelope(int n, double r);

// z1 (a - z2)/(1 - a z2) on the bidisk, truncated at total degree D,
// with its geometric tail bound recorded in tail_note.
MultiSeries two_variable_extremal(double a, int D);

// Tail of the majorant of two_variable_extremal(a, D) at (|z1|, |z2|).
double two_variable_extremal_majorant_tail(double a, int D, double r1, double r2);

enum class SampleConstruction {
    line_composition, // g(lambda_1 z_1 + ... + lambda_n z_n), sum |lambda_j| <= 1
    factor_product,   // g_1(z_1) ... g_n(z_n)
};

struct SampleSpec {
    SampleConstruction construction = SampleConstruction::line_composition;
    int degree_cap = 12;
    bool force_zero_constant = false; // sample with f(0) = 0
};

// Seed-deterministic sampler of functions bounded by 1 on the polydisk.
MultiSeries sample_polydisk_bounded(int n, std::uint64_t seed,
                                    const SampleSpec& spec);

// Deterministic expansion of g(lambda . z) through total degree D.
MultiSeries compose_linear(const CoefficientSeries& g,
                           const std::vector<Complex>& lambda, int D);

// g_1(z_1) ... g_n(z_n), truncated at total degree D.
MultiSeries factor_product(const std::vector<CoefficientSeries>& factors, int D);

} // namespace bohr::multidim

#endif
