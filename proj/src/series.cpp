#include "bohr/series.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace bohr::series {

namespace {

void check_a(double a) {
    if (!(a >= 0.0 && a < 1.0))
        throw std::domain_error("a must lie in [0,1)");
}

std::string format_label(const std::string& head, double a) {
    std::ostringstream os;
    os << head << "(a=" << a << ")";
    return os.str();
}

} // namespace

std::string provenance_name(Provenance p) {
    switch (p) {
    case Provenance::moebius: return "moebius";
    case Provenance::shifted_moebius: return "shifted_moebius";
    case Provenance::blaschke: return "blaschke";
    case Provenance::schur: return "schur";
    case Provenance::manual: return "manual";
    }
    return "manual";
}

CoefficientSeries moebius_series(double a, int M) {
    check_a(a);
    if (M < 1) throw std::invalid_argument("M must be >= 1");
    CoefficientSeries f;
    f.truncation_order = M;
    f.coeffs.resize(static_cast<size_t>(M) + 1);
    f.coeffs[0] = a;
    // c_k = (a^2 - 1) a^{k-1}
    double ak = 1.0;
    for (int k = 1; k <= M; ++k) {
        f.coeffs[static_cast<size_t>(k)] = (a * a - 1.0) * ak;
        ak *= a;
    }
    // magnitudes are decreasing, so this dominates every discarded coefficient
    f.tail_coeff_bound = (1.0 - a * a) * std::pow(a, M - 1);
    f.provenance = Provenance::moebius;
    f.label = format_label("moebius", a);
    return f;
}

CoefficientSeries shifted_moebius_series(double a, int M) {
    check_a(a);
    if (M < 2) throw std::invalid_argument("M must be >= 2");
    CoefficientSeries f;
    f.truncation_order = M;
    f.coeffs.resize(static_cast<size_t>(M) + 1);
    f.coeffs[0] = 0.0;
    f.coeffs[1] = a;
    double ak = 1.0;
    for (int k = 2; k <= M; ++k) {
        f.coeffs[static_cast<size_t>(k)] = (a * a - 1.0) * ak;
        ak *= a;
    }
    f.tail_coeff_bound = (1.0 - a * a) * std::pow(a, M - 1);
    f.provenance = Provenance::shifted_moebius;
    f.label = format_label("shifted_moebius", a);
    return f;
}

namespace ops {

std::vector<Complex> mul(const std::vector<Complex>& u,
                         const std::vector<Complex>& v, int M) {
    std::vector<Complex> w(static_cast<size_t>(M) + 1, Complex(0.0));
    const int du = static_cast<int>(u.size()) - 1;
    const int dv = static_cast<int>(v.size()) - 1;
    for (int i = 0; i <= std::min(du, M); ++i) {
        if (u[static_cast<size_t>(i)] == Complex(0.0)) continue;
        const int jmax = std::min(dv, M - i);
        for (int j = 0; j <= jmax; ++j)
            w[static_cast<size_t>(i + j)] +=
                u[static_cast<size_t>(i)] * v[static_cast<size_t>(j)];
    }
    return w;
}

std::vector<Complex> reciprocal(const std::vector<Complex>& v, int M) {
    if (v.empty() || v[0] == Complex(0.0))
        throw std::domain_error("series reciprocal needs nonzero constant term");
    std::vector<Complex> w(static_cast<size_t>(M) + 1, Complex(0.0));
    w[0] = 1.0 / v[0];
    const int dv = static_cast<int>(v.size()) - 1;
    for (int n = 1; n <= M; ++n) {
        Complex s = 0.0;
        for (int k = 1; k <= std::min(n, dv); ++k)
            s += v[static_cast<size_t>(k)] * w[static_cast<size_t>(n - k)];
        w[static_cast<size_t>(n)] = -s / v[0];
    }
    return w;
}

std::vector<Complex> div(const std::vector<Complex>& u,
                         const std::vector<Complex>& v, int M) {
    return mul(u, reciprocal(v, M), M);
}

} // namespace ops

CoefficientSeries blaschke_series(const std::vector<Complex>& zeros,
                                  double rotation, int M) {
    if (M < 1) throw std::invalid_argument("M must be >= 1");
    if (zeros.size() > 16)
        throw std::invalid_argument("at most 16 Blaschke factors supported");
    for (const auto& z : zeros)
        if (!(std::abs(z) < 1.0))
            throw std::domain_error("Blaschke zeros must satisfy |z| < 1");

    std::vector<Complex> acc(static_cast<size_t>(M) + 1, Complex(0.0));
    acc[0] = std::polar(1.0, rotation);
    for (const auto& zj : zeros) {
        // (zj - z) / (1 - conj(zj) z): coefficient 0 is zj,
        // coefficient k >= 1 is conj(zj)^{k-1} (|zj|^2 - 1).
        std::vector<Complex> factor(static_cast<size_t>(M) + 1);
        factor[0] = zj;
        Complex cz = std::conj(zj);
        Complex pw = 1.0;
        const double m2 = std::norm(zj);
        for (int k = 1; k <= M; ++k) {
            factor[static_cast<size_t>(k)] = pw * (m2 - 1.0);
            pw *= cz;
        }
        acc = ops::mul(acc, factor, M);
    }

    CoefficientSeries f;
    f.coeffs = std::move(acc);
    f.truncation_order = M;
    f.tail_coeff_bound = 1.0 - std::norm(f.coeffs[0]);
    f.provenance = Provenance::blaschke;
    std::ostringstream os;
    os << "blaschke(" << zeros.size() << " zeros, rot=" << rotation << ")";
    f.label = os.str();
    return f;
}

CoefficientSeries schur_series(const std::vector<Complex>& params, int M) {
    if (M < 0) throw std::invalid_argument("M must be >= 0");
    if (params.empty())
        throw std::invalid_argument("at least one Schur parameter required");
    for (const auto& g : params)
        if (std::abs(g) > 1.0 + 1e-12)
            throw std::domain_error("Schur parameters must satisfy |g| <= 1");

    // A unimodular parameter forces f_k == g_k; later parameters are moot.
    size_t depth = params.size();
    for (size_t k = 0; k < params.size(); ++k) {
        if (std::abs(params[k]) >= 1.0 - 1e-15) {
            depth = k + 1;
            break;
        }
    }

    std::vector<Complex> f(static_cast<size_t>(M) + 1, Complex(0.0));
    // backward recursion from the innermost parameter
    for (size_t i = depth; i-- > 0;) {
        const Complex g = params[i];
        // shifted = z * f
        std::vector<Complex> shifted(static_cast<size_t>(M) + 1, Complex(0.0));
        for (int n = 1; n <= M; ++n)
            shifted[static_cast<size_t>(n)] = f[static_cast<size_t>(n - 1)];
        std::vector<Complex> num = shifted;
        num[0] += g;
        std::vector<Complex> den(static_cast<size_t>(M) + 1, Complex(0.0));
        const Complex cg = std::conj(g);
        den[0] = 1.0;
        for (int n = 0; n <= M; ++n)
            den[static_cast<size_t>(n)] += cg * shifted[static_cast<size_t>(n)];
        f = ops::div(num, den, M);
    }

    CoefficientSeries out;
    out.coeffs = std::move(f);
    out.truncation_order = M;
    out.tail_coeff_bound = 1.0 - std::norm(out.coeffs[0]);
    out.provenance = Provenance::schur;
    std::ostringstream os;
    os << "schur(" << depth << " params)";
    out.label = os.str();
    return out;
}

CoefficientSeries constant_series(Complex c0, int M) {
    if (M < 0) throw std::invalid_argument("M must be >= 0");
    if (std::abs(c0) > 1.0 + 1e-12)
        throw std::domain_error("constant must satisfy |c0| <= 1");
    CoefficientSeries f;
    f.coeffs.assign(static_cast<size_t>(M) + 1, Complex(0.0));
    f.coeffs[0] = c0;
    f.truncation_order = M;
    f.tail_coeff_bound = 0.0;
    f.provenance = Provenance::manual;
    f.label = "constant";
    return f;
}

ModulusInterval eval_modulus(const CoefficientSeries& f, Complex z) {
    const double r = std::abs(z);
    if (!(r < 1.0)) throw std::domain_error("|z| must be < 1");
    Complex s = 0.0;
    for (size_t n = f.coeffs.size(); n-- > 0;) s = s * z + f.coeffs[n];
    const double m = std::abs(s);
    const double tail =
        f.tail_coeff_bound * std::pow(r, f.truncation_order + 1) / (1.0 - r);
    // Horner roundoff allowance so the enclosure survives floating point
    const double rounding = std::numeric_limits<double>::epsilon() *
                            (4.0 + 2.0 * static_cast<double>(f.coeffs.size()));
    ModulusInterval iv;
    iv.lower = std::max(0.0, m - tail - rounding);
    iv.upper = std::min(1.0, m + tail + rounding);
    if (iv.upper < iv.lower) iv.upper = iv.lower;
    return iv;
}

std::string to_json(const CoefficientSeries& f) {
    nlohmann::json j;
    auto& arr = j["coeffs"] = nlohmann::json::array();
    for (const auto& c : f.coeffs) arr.push_back({c.real(), c.imag()});
    j["truncation_order"] = f.truncation_order;
    j["tail_coeff_bound"] = f.tail_coeff_bound;
    j["provenance"] = provenance_name(f.provenance);
    j["label"] = f.label;
    return j.dump();
}

CoefficientSeries series_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    CoefficientSeries f;
    for (const auto& pr : j.at("coeffs"))
        f.coeffs.emplace_back(pr.at(0).get<double>(), pr.at(1).get<double>());
    f.truncation_order = j.at("truncation_order").get<int>();
    f.tail_coeff_bound = j.at("tail_coeff_bound").get<double>();
    const std::string prov = j.at("provenance").get<std::string>();
    if (prov == "moebius") f.provenance = Provenance::moebius;
    else if (prov == "shifted_moebius") f.provenance = Provenance::shifted_moebius;
    else if (prov == "blaschke") f.provenance = Provenance::blaschke;
    else if (prov == "schur") f.provenance = Provenance::schur;
    else f.provenance = Provenance::manual;
    if (j.contains("label")) f.label = j["label"].get<std::string>();
    if (static_cast<int>(f.coeffs.size()) != f.truncation_order + 1)
        throw std::invalid_argument("coeffs length does not match truncation_order");
    return f;
}

} // namespace bohr::series
