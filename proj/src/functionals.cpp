#include "bohr/functionals.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace bohr::functionals {

namespace {

void check_r(double r) {
    if (!(r >= 0.0 && r < 1.0))
        throw std::domain_error("r must lie in [0,1)");
}

void finalize(const CoefficientSeries& f, FunctionalReport& rep) {
    rep.a = f.a0();
    double s = 0.0;
    for (const auto& [name, v] : rep.lhs_components) s += v;
    rep.lhs_value = s;
    rep.margin = rep.rhs_value - rep.lhs_value;
}

} // namespace

std::string kind_name(Kind k) {
    switch (k) {
    case Kind::classical: return "classical";
    case Kind::refined_a: return "refined-a";
    case Kind::refined_b: return "refined-b";
    case Kind::bombieri: return "bombieri";
    case Kind::improved: return "improved";
    case Kind::refined_improved: return "refined-improved";
    }
    return "classical";
}

Kind kind_from_name(const std::string& name) {
    if (name == "classical") return Kind::classical;
    if (name == "refined-a") return Kind::refined_a;
    if (name == "refined-b") return Kind::refined_b;
    if (name == "bombieri") return Kind::bombieri;
    if (name == "improved") return Kind::improved;
    if (name == "refined-improved") return Kind::refined_improved;
    throw std::invalid_argument("unknown inequality kind: " + name);
}

SumWithError bohr_tail(const CoefficientSeries& f, double r, int N) {
    check_r(r);
    if (N < 0) throw std::invalid_argument("N must be >= 0");
    const int M = f.truncation_order;
    double s = 0.0;
    double rn = std::pow(r, N);
    for (int n = N; n <= M; ++n) {
        s += std::abs(f.c(n)) * rn;
        rn *= r;
    }
    SumWithError out;
    out.value = s;
    out.error = f.tail_coeff_bound * std::pow(r, std::max(N, M + 1)) / (1.0 - r);
    return out;
}

SumWithError quadratic_term(const CoefficientSeries& f, double r) {
    check_r(r);
    const int M = f.truncation_order;
    double s = 0.0;
    const double r2 = r * r;
    double rn = r2;
    for (int n = 1; n <= M; ++n) {
        s += std::norm(f.c(n)) * rn;
        rn *= r2;
    }
    SumWithError out;
    out.value = s;
    out.error = f.tail_coeff_bound * f.tail_coeff_bound *
                std::pow(r, 2 * (M + 1)) / (1.0 - r2);
    return out;
}

double coupling_factor(double a, double r) {
    return 1.0 / (1.0 + a) + r / (1.0 - r);
}

FunctionalReport classical_report(const CoefficientSeries& f, double r) {
    check_r(r);
    const auto b0 = bohr_tail(f, r, 0);
    FunctionalReport rep;
    rep.kind = Kind::classical;
    rep.r = r;
    rep.lhs_components["bohr_tail"] = b0.value;
    rep.truncation_error = b0.error;
    rep.rhs_value = 1.0;
    finalize(f, rep);
    return rep;
}

FunctionalReport refined_a_report(const CoefficientSeries& f, double r) {
    check_r(r);
    const double a = f.a0();
    const auto b1 = bohr_tail(f, r, 1);
    const auto q = quadratic_term(f, r);
    const double coupling = coupling_factor(a, r);
    FunctionalReport rep;
    rep.kind = Kind::refined_a;
    rep.r = r;
    rep.lhs_components["bohr_tail"] = b1.value;
    rep.lhs_components["quadratic_term"] = coupling * q.value;
    rep.truncation_error = b1.error + coupling * q.error;
    rep.rhs_value = r * (1.0 - a * a) / (1.0 - r);
    finalize(f, rep);
    return rep;
}

FunctionalReport refined_b_report(const CoefficientSeries& f, double r, double p) {
    check_r(r);
    if (!(p > 0.0)) throw std::invalid_argument("p must be > 0");
    const double a = f.a0();
    const auto b1 = bohr_tail(f, r, 1);
    const auto q = quadratic_term(f, r);
    const double coupling = coupling_factor(a, r);
    FunctionalReport rep;
    rep.kind = Kind::refined_b;
    rep.r = r;
    rep.p = p;
    rep.out_of_theorem_range = p > 2.0;
    rep.lhs_components["modulus_term"] = std::pow(a, p);
    rep.lhs_components["bohr_tail"] = b1.value;
    rep.lhs_components["quadratic_term"] = coupling * q.value;
    rep.truncation_error = b1.error + coupling * q.error;
    rep.rhs_value = 1.0;
    finalize(f, rep);
    return rep;
}

FunctionalReport bombieri_report(const CoefficientSeries& f, double r) {
    check_r(r);
    if (f.a0() > 1e-12)
        throw std::domain_error("bombieri functional requires f(0) = 0");
    const auto b1 = bohr_tail(f, r, 1);
    FunctionalReport rep;
    rep.kind = Kind::bombieri;
    rep.r = r;
    rep.lhs_components["bohr_tail"] = b1.value;
    rep.truncation_error = b1.error;
    rep.rhs_value = 1.0;
    finalize(f, rep);
    return rep;
}

FunctionalReport improved_report(const CoefficientSeries& f, Complex z,
                                 double p, int N) {
    if (!(std::abs(z) < 1.0)) throw std::domain_error("|z| must be < 1");
    if (!(p > 0.0)) throw std::invalid_argument("p must be > 0");
    if (N < 1) throw std::invalid_argument("N must be >= 1");
    const double r = std::abs(z);
    const auto iv = series::eval_modulus(f, z);
    const auto bn = bohr_tail(f, r, N);
    FunctionalReport rep;
    rep.kind = Kind::improved;
    rep.r = r;
    rep.p = p;
    rep.N = N;
    rep.evaluation_point = z;
    rep.out_of_theorem_range = p > 2.0;
    // upper enclosure keeps the verdict one-sided
    rep.lhs_components["modulus_term"] = std::pow(iv.upper, p);
    rep.lhs_components["bohr_tail"] = bn.value;
    rep.truncation_error = bn.error;
    rep.rhs_value = 1.0;
    finalize(f, rep);
    return rep;
}

FunctionalReport refined_improved_report(const CoefficientSeries& f, Complex z,
                                         double p) {
    if (!(std::abs(z) < 1.0)) throw std::domain_error("|z| must be < 1");
    if (!(p > 0.0)) throw std::invalid_argument("p must be > 0");
    const double r = std::abs(z);
    const double a = f.a0();
    const auto iv = series::eval_modulus(f, z);
    const auto b1 = bohr_tail(f, r, 1);
    const auto q = quadratic_term(f, r);
    const double coupling = coupling_factor(a, r);
    FunctionalReport rep;
    rep.kind = Kind::refined_improved;
    rep.r = r;
    rep.p = p;
    rep.evaluation_point = z;
    rep.lhs_components["modulus_term"] = std::pow(iv.upper, p);
    rep.lhs_components["bohr_tail"] = b1.value;
    rep.lhs_components["quadratic_term"] = coupling * q.value;
    rep.truncation_error = b1.error + coupling * q.error;
    rep.rhs_value = 1.0;
    finalize(f, rep);
    return rep;
}

std::string FunctionalReport::to_json() const {
    nlohmann::json j;
    j["kind"] = kind_name(kind);
    j["lhs_value"] = lhs_value;
    j["lhs_components"] = lhs_components;
    j["rhs_value"] = rhs_value;
    j["truncation_error"] = truncation_error;
    j["margin"] = margin;
    j["r"] = r;
    j["a"] = a;
    if (p > 0.0) j["p"] = p;
    if (N > 0) j["N"] = N;
    if (evaluation_point)
        j["evaluation_point"] = {evaluation_point->real(), evaluation_point->imag()};
    j["out_of_theorem_range"] = out_of_theorem_range;
    return j.dump();
}

std::string FunctionalReport::csv_header() {
    return "kind,r,p,N,a,lhs,rhs,margin,trunc_error";
}

std::string FunctionalReport::csv_row() const {
    std::ostringstream os;
    os.precision(17);
    os << kind_name(kind) << ',' << r << ',' << p << ',' << N << ',' << a
       << ',' << lhs_value << ',' << rhs_value << ',' << margin << ','
       << truncation_error;
    return os.str();
}

} // namespace bohr::functionals
