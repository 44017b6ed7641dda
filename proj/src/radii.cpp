#include "bohr/radii.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace bohr::radii {

namespace {

constexpr double kBracketTol = 1e-14;
constexpr int kMaxIter = 200;
constexpr double kScanStep = 1e-3;

void check_a(double a) {
    if (!(a >= 0.0 && a < 1.0))
        throw std::domain_error("a must lie in [0,1)");
}

// First sign change of f on [lo, hi] scanning with the given step.
// Throws if none is found.
std::pair<double, double> first_sign_change(
    const std::function<double(double)>& f, double lo, double hi, double step) {
    double x0 = lo;
    double f0 = f(x0);
    while (x0 < hi) {
        const double x1 = std::min(x0 + step, hi);
        const double f1 = f(x1);
        if (f0 == 0.0) return {x0, x0};
        if ((f0 < 0.0) != (f1 < 0.0)) return {x0, x1};
        x0 = x1;
        f0 = f1;
    }
    throw std::runtime_error("no sign change found on scan grid");
}

RadiusResult bisection_result(const std::string& kind,
                              const std::function<double(double)>& f,
                              std::pair<double, double> bracket) {
    RadiusResult res;
    res.kind = kind;
    res.method = Method::bisection;
    res.bracket = bracket;
    res.value = bisect(f, bracket.first, bracket.second);
    res.residual = std::abs(f(res.value));
    return res;
}

} // namespace

double bisect(const std::function<double(double)>& f, double lo, double hi) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo < 0.0) == (fhi < 0.0))
        throw std::invalid_argument("bisect: bracket does not change sign");
    for (int i = 0; i < kMaxIter && hi - lo > kBracketTol; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

RadiusResult radius_r_p(double a, double p) {
    check_a(a);
    if (!(p > 0.0)) throw std::invalid_argument("p must be > 0");
    RadiusResult res;
    res.kind = "rp";
    res.method = Method::closed_form;
    const double ap = std::pow(a, p);
    res.value = (1.0 - ap) / (2.0 - a * a - ap);
    res.out_of_theorem_range = p > 2.0;
    return res;
}

double equation_A(double a, double p, double r) {
    if (!(a >= 0.0 && a < 1.0))
        throw std::domain_error("a must lie in [0,1)");
    if (!(r >= 0.0 && r <= 1.0))
        throw std::domain_error("r must lie in [0,1]");
    return (1.0 - (2.0 - a * a) * r) * std::pow(1.0 + a * r, p) -
           (1.0 - r) * std::pow(r + a, p);
}

RadiusResult radius_R_Np(int N, double p) {
    if (N < 1) throw std::invalid_argument("N must be >= 1");
    if (!(p > 0.0)) throw std::invalid_argument("p must be > 0");
    auto g = [N, p](double r) {
        return 2.0 * (1.0 + r) * std::pow(r, N) - p * (1.0 - r) * (1.0 - r);
    };
    // g(0) = -p < 0, g(1) = 2^{N+1} > 0
    auto bracket = first_sign_change(g, 0.0, 1.0, kScanStep);
    auto res = bisection_result("Rnp", g, bracket);
    res.out_of_theorem_range = p > 2.0;
    return res;
}

RadiusResult radius_R_p(double p) {
    if (!(p > 0.0)) throw std::invalid_argument("p must be > 0");
    RadiusResult res;
    res.kind = "Rp";
    res.method = Method::closed_form;
    res.value = p / (std::sqrt(4.0 * p + 1.0) + p + 1.0);
    res.out_of_theorem_range = p > 2.0;
    return res;
}

RadiusResult radius_r_ap(double a, double p) {
    check_a(a);
    if (!(p > 0.0)) throw std::invalid_argument("p must be > 0");
    auto f = [a, p](double r) { return equation_A(a, p, r); };
    // A(0) = 1 - a^p > 0 and A(1) < 0: the first crossing is the root we want
    auto bracket = first_sign_change(f, 0.0, 1.0, kScanStep);
    return bisection_result("rap", f, bracket);
}

RadiusResult radius_r_a2(double a) {
    check_a(a);
    auto f = [a](double r) {
        return (1.0 - a * a) * r * r * r - (1.0 + 2.0 * a) * r * r -
               2.0 * r + 1.0;
    };
    auto bracket = first_sign_change(f, 0.0, 1.0, kScanStep);
    auto res = bisection_result("ra2", f, bracket);
    return res;
}

double psi(int N, double p, double a, double r) {
    if (N < 1) throw std::invalid_argument("N must be >= 1");
    if (!(p > 0.0)) throw std::invalid_argument("p must be > 0");
    if (!(a >= 0.0 && a <= 1.0))
        throw std::domain_error("a must lie in [0,1]");
    if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("r must lie in [0,1)");
    return (1.0 - r - (1.0 - a * a) * std::pow(r, N)) / (1.0 - r) -
           std::pow((r + a) / (1.0 + r * a), p);
}

double q_sharpness(int N, double p, double a, double r) {
    if (!(a >= 0.0 && a < 1.0))
        throw std::domain_error("a must lie in [0,1); use q_sharpness_limit at a = 1");
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("r must lie in (0,1)");
    const double bracket =
        ((1.0 + a) / (1.0 - a * r)) * std::pow(a, N - 1) * std::pow(r, N) -
        (1.0 - std::pow((r + a) / (1.0 + r * a), p)) / (1.0 - a);
    return (1.0 - a * r) * std::pow(1.0 + a * r, p) * bracket;
}

double q_sharpness_limit(int N, double p, double r) {
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("r must lie in (0,1)");
    return (1.0 - r) * std::pow(1.0 + r, p) *
           (2.0 * std::pow(r, N) / (1.0 - r) - p * (1.0 - r) / (1.0 + r));
}

InfimumScan infimum_scan(ScanKind kind, double p, int grid_size) {
    if (grid_size < 100) throw std::invalid_argument("grid_size must be >= 100");
    auto radius_at = [kind, p](double a) {
        switch (kind) {
        case ScanKind::r_p: return radius_r_p(a, p).value;
        case ScanKind::r_ap: return radius_r_ap(a, p).value;
        case ScanKind::r_a2: return radius_r_a2(a).value;
        }
        throw std::invalid_argument("unknown scan kind");
    };
    InfimumScan out;
    out.inf_value = radius_at(0.0);
    out.argmin_a = 0.0;
    for (int i = 1; i < grid_size; ++i) {
        const double a = static_cast<double>(i) / grid_size;
        const double v = radius_at(a);
        if (v < out.inf_value) {
            out.inf_value = v;
            out.argmin_a = a;
        }
    }
    // one-sided a -> 1 estimates, reported raw
    for (int k = 4; k <= 8; ++k) {
        const double a = 1.0 - std::pow(10.0, -k);
        const double v = radius_at(a);
        out.limit_sequence.push_back(v);
        if (v < out.inf_value) {
            out.inf_value = v;
            out.argmin_a = a;
        }
    }
    return out;
}

std::string RadiusResult::to_json() const {
    nlohmann::json j;
    j["kind"] = kind;
    j["value"] = value;
    j["method"] = method == Method::closed_form ? "closed_form" : "bisection";
    j["residual"] = residual;
    if (bracket) j["bracket"] = {bracket->first, bracket->second};
    j["out_of_theorem_range"] = out_of_theorem_range;
    return j.dump();
}

std::string radius_csv_header() { return "kind,a,p,N,value,method,residual"; }

std::string radius_csv_row(const RadiusResult& res, double a, double p, int N) {
    std::ostringstream os;
    os.precision(17);
    os << res.kind << ',' << a << ',' << p << ',' << N << ',' << res.value
       << ',' << (res.method == Method::closed_form ? "closed_form" : "bisection")
       << ',' << res.residual;
    return os.str();
}

} // namespace bohr::radii
