#ifndef BOHR_RADII_HPP
#define BOHR_RADII_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bohr::radii {

enum class Method { closed_form, bisection };

struct RadiusResult {
    std::string kind;
    double value = 0.0;
    Method method = Method::closed_form;
    double residual = 0.0;
    std::optional<std::pair<double, double>> bracket;
    bool out_of_theorem_range = false; // p outside the theorem's stated range

    std::string to_json() const;
};

// Bisection on a sign-changing bracket; tolerance 1e-14 on the bracket
// width, at most 200 iterations.
double bisect(const std::function<double(double)>& f, double lo, double hi);

// r_p(a) = (1 - a^p) / (2 - a^2 - a^p), the refined-inequality radius.
RadiusResult radius_r_p(double a, double p);

// A_{a,p}(r) = [1 - (2 - a^2) r](1 + a r)^p - (1 - r)(r + a)^p
double equation_A(double a, double p, double r);

// Positive root in (0,1) of 2(1+r)r^N - p(1-r)^2 = 0.
RadiusResult radius_R_Np(int N, double p);

// R_p = p / (sqrt(4p+1) + p + 1), closed form of radius_R_Np(1, p).
RadiusResult radius_R_p(double p);

// Minimum positive root of A_{a,p}(r) = 0 in (0,1).
RadiusResult radius_r_ap(double a, double p);

// Least positive root of (1-a^3)r^3 - (1+2a)r^2 - 2r + 1 = 0,
// the p = 2 specialization of radius_r_ap.
RadiusResult radius_r_a2(double a);

// Psi_{N,p}(a) = [1 - r - (1-a^2) r^N] / (1-r) - ((r+a)/(1+ra))^p
double psi(int N, double p, double a, double r);

// Q_{N,p}(a,r), the sharpness discriminant of the improved inequality.
double q_sharpness(int N, double p, double a, double r);

// a -> 1 limit of Q_{N,p}: (1-r)(1+r)^p [2 r^N/(1-r) - p(1-r)/(1+r)].
double q_sharpness_limit(int N, double p, double r);

enum class ScanKind { r_p, r_ap, r_a2 };

struct InfimumScan {
    double inf_value = 0.0;
    double argmin_a = 0.0;
    // raw values at a = 1 - 10^{-k}, k = 4..8; no extrapolation
    std::vector<double> limit_sequence;
};

InfimumScan infimum_scan(ScanKind kind, double p, int grid_size);

std::string radius_csv_header();
std::string radius_csv_row(const RadiusResult& res, double a, double p, int N);

} // namespace bohr::radii

#endif
