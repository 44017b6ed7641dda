#ifndef BOHR_FUNCTIONALS_HPP
#define BOHR_FUNCTIONALS_HPP

#include <map>
#include <optional>
#include <string>

#include "bohr/series.hpp"

namespace bohr::functionals {

using series::CoefficientSeries;
using series::Complex;

enum class Kind {
    classical,        // B_0(f,r) <= 1
    refined_a,        // B_1 + coupling * ||f_0||^2 <= r(1-a^2)/(1-r)
    refined_b,        // a^p + B_1 + coupling * ||f_0||^2 <= 1
    bombieri,         // B_1(f,r) <= 1 for f(0) = 0
    improved,         // |f(z)|^p + B_N(f,r) <= 1
    refined_improved, // |f(z)|^p + B_1 + coupling * ||f_0||^2 <= 1
};

std::string kind_name(Kind k);
Kind kind_from_name(const std::string& name);

struct SumWithError {
    double value = 0.0;
    double error = 0.0;
};

struct FunctionalReport {
    Kind kind = Kind::classical;
    double lhs_value = 0.0;
    std::map<std::string, double> lhs_components;
    double rhs_value = 1.0;
    double truncation_error = 0.0;
    double margin = 0.0; // rhs - lhs
    double r = 0.0;
    double p = 0.0;
    int N = 0;
    double a = 0.0; // |f(0)|
    std::optional<Complex> evaluation_point;
    bool out_of_theorem_range = false;

    std::string to_json() const;
    std::string csv_row() const;
    static std::string csv_header();
};

// B_N(f,r) = sum_{n>=N} |a_n| r^n, with the discarded tail enclosed
// geometrically.
SumWithError bohr_tail(const CoefficientSeries& f, double r, int N);

// ||f_0||_r^2 = sum_{n>=1} |a_n|^2 r^{2n}.
SumWithError quadratic_term(const CoefficientSeries& f, double r);

// coupling factor 1/(1+a) + r/(1-r)
double coupling_factor(double a, double r);

FunctionalReport classical_report(const CoefficientSeries& f, double r);
FunctionalReport refined_a_report(const CoefficientSeries& f, double r);
FunctionalReport refined_b_report(const CoefficientSeries& f, double r, double p);
FunctionalReport bombieri_report(const CoefficientSeries& f, double r);
FunctionalReport improved_report(const CoefficientSeries& f, Complex z,
                                 double p, int N);
FunctionalReport refined_improved_report(const CoefficientSeries& f, Complex z,
                                         double p);

} // namespace bohr::functionals

#endif
