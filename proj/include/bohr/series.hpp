#ifndef BOHR_SERIES_HPP
#define BOHR_SERIES_HPP

#include <complex>
#include <string>
#include <vector>

namespace bohr::series {

using Complex = std::complex<double>;

// Default truncation order for generated series. Overridable per call;
// the CLI also honors the BOHR_TRUNCATION environment variable.
inline constexpr int kDefaultTruncation = 512;

enum class Provenance { moebius, shifted_moebius, blaschke, schur, manual };

std::string provenance_name(Provenance p);

// Truncated Taylor coefficients of a function in the unit ball of bounded
// analytic functions, together with a bound on every discarded coefficient.
struct CoefficientSeries {
    std::vector<Complex> coeffs;   // c_0 .. c_M
    int truncation_order = 0;      // M
    double tail_coeff_bound = 0.0; // |c_n| <= this for all n > M
    Provenance provenance = Provenance::manual;
    std::string label;             // human-readable parameter summary

    int order() const { return truncation_order; }
    const Complex& c(int n) const { return coeffs[static_cast<size_t>(n)]; }
    double a0() const { return std::abs(coeffs[0]); }
};

// Rigorous enclosure of |f(z)| under truncation.
struct ModulusInterval {
    double lower = 0.0;
    double upper = 0.0;
    double width() const { return upper - lower; }
};

// Moebius witness phi_a(z) = (a - z)/(1 - a z), a in [0,1).
CoefficientSeries moebius_series(double a, int M);

// psi(z) = z (a - z)/(1 - a z), the vanishing-constant-term witness.
CoefficientSeries shifted_moebius_series(double a, int M);

// Finite Blaschke product e^{i rotation} prod_j (z_j - z)/(1 - conj(z_j) z).
CoefficientSeries blaschke_series(const std::vector<Complex>& zeros,
                                  double rotation, int M);

// Schur-algorithm sampler: backward recursion
//   f_k(z) = (g_k + z f_{k+1}(z)) / (1 + conj(g_k) z f_{k+1}(z)),
// f_{K+1} = 0, all |g_k| <= 1. A unimodular parameter truncates the
// recursion there (later parameters are ignored).
CoefficientSeries schur_series(const std::vector<Complex>& params, int M);

// Constant function c0 (|c0| <= 1), provenance manual.
CoefficientSeries constant_series(Complex c0, int M);

// Enclosure of |f(z)| at |z| < 1: partial sum plus/minus the geometric
// tail bound tail_coeff_bound * |z|^{M+1} / (1 - |z|).
ModulusInterval eval_modulus(const CoefficientSeries& f, Complex z);

// Truncated power-series helpers (degree-M convolution arithmetic).
// Exposed for reuse by the multidim module and tests.
namespace ops {
std::vector<Complex> mul(const std::vector<Complex>& u,
                         const std::vector<Complex>& v, int M);
// 1/v with v[0] != 0.
std::vector<Complex> reciprocal(const std::vector<Complex>& v, int M);
std::vector<Complex> div(const std::vector<Complex>& u,
                         const std::vector<Complex>& v, int M);
} // namespace ops

std::string to_json(const CoefficientSeries& f);
CoefficientSeries series_from_json(const std::string& text);

} // namespace bohr::series

#endif
