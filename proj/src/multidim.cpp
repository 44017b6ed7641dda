#include "bohr/multidim.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace bohr::multidim {

namespace {

int total_degree(const MultiIndex& alpha) {
    int s = 0;
    for (int v : alpha) s += v;
    return s;
}

void check_dimension(const MultiSeries& F, size_t got) {
    if (static_cast<size_t>(F.dimension) != got)
        throw std::invalid_argument("dimension mismatch");
}

} // namespace

Complex MultiSeries::at(const MultiIndex& alpha) const {
    auto it = coeffs.find(alpha);
    return it == coeffs.end() ? Complex(0.0) : it->second;
}

void MultiSeries::set(const MultiIndex& alpha, Complex c) {
    if (static_cast<int>(alpha.size()) != dimension)
        throw std::invalid_argument("multi-index length must equal dimension");
    for (int v : alpha)
        if (v < 0) throw std::invalid_argument("multi-index entries must be >= 0");
    const int d = total_degree(alpha);
    if (d > max_degree) max_degree = d;
    if (c == Complex(0.0))
        coeffs.erase(alpha);
    else
        coeffs[alpha] = c;
}

Complex MultiSeries::constant_term() const {
    return at(MultiIndex(static_cast<size_t>(dimension), 0));
}

std::vector<std::pair<MultiIndex, Complex>> MultiSeries::slice(int k) const {
    std::vector<std::pair<MultiIndex, Complex>> out;
    for (const auto& [alpha, c] : coeffs)
        if (total_degree(alpha) == k) out.emplace_back(alpha, c);
    return out;
}

CoefficientSeries restrict_to_line(const MultiSeries& F,
                                   const std::vector<Complex>& direction,
                                   double tail_coeff_bound) {
    check_dimension(F, direction.size());
    CoefficientSeries f;
    f.truncation_order = F.max_degree;
    f.coeffs.assign(static_cast<size_t>(F.max_degree) + 1, Complex(0.0));
    for (const auto& [alpha, c] : F.coeffs) {
        Complex term = c;
        for (size_t j = 0; j < direction.size(); ++j)
            for (int e = 0; e < alpha[j]; ++e) term *= direction[j];
        f.coeffs[static_cast<size_t>(total_degree(alpha))] += term;
    }
    f.tail_coeff_bound = tail_coeff_bound;
    f.provenance = series::Provenance::manual;
    f.label = "line restriction";
    return f;
}

MajorantSums homogeneous_majorants(const MultiSeries& F,
                                   const std::vector<Complex>& z) {
    check_dimension(F, z.size());
    std::vector<Complex> slice_val(static_cast<size_t>(F.max_degree) + 1,
                                   Complex(0.0));
    MajorantSums out;
    for (const auto& [alpha, c] : F.coeffs) {
        Complex term = c;
        for (size_t j = 0; j < z.size(); ++j)
            for (int e = 0; e < alpha[j]; ++e) term *= z[j];
        slice_val[static_cast<size_t>(total_degree(alpha))] += term;
        out.full_sum += std::abs(term);
    }
    for (const auto& v : slice_val) {
        const double m = std::abs(v);
        out.slice_sum += m;
        out.quad_sum += m * m;
    }
    return out;
}

DRReport dr_check(const MultiSeries& F, double q) {
    if (!(q >= 2.0)) throw std::invalid_argument("q must be >= 2");
    DRReport rep;
    rep.q = q;
    const double c0sq = std::norm(F.constant_term());
    std::vector<double> sq(static_cast<size_t>(F.max_degree) + 1, 0.0);
    for (const auto& [alpha, c] : F.coeffs) {
        const int k = total_degree(alpha);
        if (k >= 1) sq[static_cast<size_t>(k)] += std::norm(c);
    }
    rep.rhs = std::pow(1.0 - c0sq, q - 1.0);
    for (int k = 1; k <= F.max_degree; ++k) {
        const double bk = std::sqrt(sq[static_cast<size_t>(k)]);
        rep.b_k.push_back(bk);
        rep.per_k_ok.push_back(bk <= 1.0 - c0sq + 1e-12);
        rep.lhs_sum += std::pow(bk, q);
    }
    rep.sum_ok = rep.lhs_sum <= rep.rhs + 1e-12;
    return rep;
}

BoundPair kn_bounds(int n) {
    if (n <= 1) throw std::invalid_argument("n must be > 1");
    BoundPair b;
    b.lower = 1.0 / (3.0 * std::sqrt(static_cast<double>(n)));
    b.upper = 2.0 * std::sqrt(std::log(static_cast<double>(n))) /
              std::sqrt(static_cast<double>(n));
    if (b.upper >= 1.0) {
        b.upper = 1.0;
        b.upper_vacuous = true;
    }
    return b;
}

BoundPair kn0_bounds(int n) {
    if (n <= 1) throw std::invalid_argument("n must be > 1");
    BoundPair b;
    b.lower = 1.0 / std::sqrt(2.0 * n);
    if (n == 2) {
        b.upper = 1.0 / std::sqrt(2.0);
    } else {
        b.upper = 2.0 * std::sqrt(std::log(static_cast<double>(n))) /
                  std::sqrt(static_cast<double>(n));
        if (b.upper >= 1.0) {
            b.upper = 1.0;
            b.upper_vacuous = true;
        }
    }
    return b;
}

double majorant_envelope(int n, double r) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    const double nr2 = n * r * r;
    if (!(nr2 < 1.0)) throw std::domain_error("n r^2 must be < 1");
    return std::sqrt(nr2 / (1.0 - nr2));
}

MultiSeries two_variable_extremal(double a, int D) {
    if (!(a >= 0.0 && a < 1.0)) throw std::domain_error("a must lie in [0,1)");
    if (D < 2) throw std::invalid_argument("D must be >= 2");
    // z1 (a - z2)/(1 - a z2) = a z1 - (1-a^2) sum_{k>=1} a^{k-1} z1 z2^k
    MultiSeries F;
    F.dimension = 2;
    F.set({1, 0}, a);
    double ak = 1.0;
    for (int k = 1; k + 1 <= D; ++k) {
        F.set({1, k}, -(1.0 - a * a) * ak);
        ak *= a;
    }
    F.max_degree = D;
    F.tail_note = "geometric: |c_{(1,k)}| = (1-a^2) a^{k-1} for k >= D";
    return F;
}

double two_variable_extremal_majorant_tail(double a, int D, double r1,
                                           double r2) {
    if (!(a >= 0.0 && a < 1.0)) throw std::domain_error("a must lie in [0,1)");
    if (!(r2 >= 0.0 && a * r2 < 1.0))
        throw std::domain_error("need a*r2 < 1");
    // discarded terms: (1-a^2) a^{k-1} r1 r2^k for k >= D
    return (1.0 - a * a) * std::pow(a, D - 1) * r1 * std::pow(r2, D) /
           (1.0 - a * r2);
}

MultiSeries compose_linear(const CoefficientSeries& g,
                           const std::vector<Complex>& lambda, int D) {
    const int n = static_cast<int>(lambda.size());
    if (n < 1) throw std::invalid_argument("lambda must be nonempty");
    double sum_abs = 0.0;
    for (const auto& l : lambda) sum_abs += std::abs(l);
    if (sum_abs > 1.0 + 1e-12)
        throw std::invalid_argument("sum of |lambda_j| must be <= 1");

    MultiSeries F;
    F.dimension = n;
    F.max_degree = D;
    // w = lambda . z as a sparse degree-1 polynomial
    std::map<MultiIndex, Complex> w;
    for (int j = 0; j < n; ++j) {
        if (lambda[static_cast<size_t>(j)] == Complex(0.0)) continue;
        MultiIndex e(static_cast<size_t>(n), 0);
        e[static_cast<size_t>(j)] = 1;
        w[e] = lambda[static_cast<size_t>(j)];
    }
    // accumulate g_k w^k by repeated sparse multiplication
    std::map<MultiIndex, Complex> power; // w^k
    power[MultiIndex(static_cast<size_t>(n), 0)] = 1.0;
    const int kmax = std::min(D, g.truncation_order);
    for (int k = 0; k <= kmax; ++k) {
        const Complex gk = g.c(k);
        if (gk != Complex(0.0))
            for (const auto& [alpha, c] : power) F.set(alpha, F.at(alpha) + gk * c);
        if (k == kmax) break;
        std::map<MultiIndex, Complex> next;
        for (const auto& [alpha, c] : power) {
            for (const auto& [e, l] : w) {
                MultiIndex beta = alpha;
                for (int j = 0; j < n; ++j) beta[static_cast<size_t>(j)] += e[static_cast<size_t>(j)];
                next[beta] += c * l;
            }
        }
        power = std::move(next);
    }
    F.max_degree = D;
    return F;
}

MultiSeries sample_polydisk_bounded(int n, std::uint64_t seed,
                                    const SampleSpec& spec) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> depth_dist(1, 8);

    auto disk_point = [&](double radius) {
        // uniform on the disk of the given radius
        const double rho = radius * std::sqrt(unit(rng));
        const double phi = 2.0 * M_PI * unit(rng);
        return std::polar(rho, phi);
    };
    auto schur_sample = [&](bool zero_constant) {
        const int depth = depth_dist(rng);
        std::vector<Complex> params;
        params.reserve(static_cast<size_t>(depth) + 1);
        if (zero_constant) params.push_back(0.0);
        for (int i = 0; i < depth; ++i) params.push_back(disk_point(0.95));
        return series::schur_series(params, spec.degree_cap);
    };

    if (spec.construction == SampleConstruction::line_composition) {
        std::vector<Complex> lambda(static_cast<size_t>(n));
        double sum_abs = 0.0;
        for (auto& l : lambda) {
            l = disk_point(1.0);
            sum_abs += std::abs(l);
        }
        // rescale so the line stays inside the polydisk majorant budget
        const double target = 0.2 + 0.8 * unit(rng);
        if (sum_abs > 0.0)
            for (auto& l : lambda) l *= target / sum_abs;
        const auto g = schur_sample(spec.force_zero_constant);
        auto F = compose_linear(g, lambda, spec.degree_cap);
        F.tail_note = "line composition sample";
        return F;
    }

    // product of independent one-variable factors
    std::vector<CoefficientSeries> factors;
    factors.reserve(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j)
        factors.push_back(schur_sample(spec.force_zero_constant && j == 0));
    auto F = factor_product(factors, spec.degree_cap);
    F.tail_note = "factor product sample";
    return F;
}

MultiSeries factor_product(const std::vector<CoefficientSeries>& factors, int D) {
    const int n = static_cast<int>(factors.size());
    if (n < 1) throw std::invalid_argument("factors must be nonempty");
    MultiSeries F;
    F.dimension = n;
    // sparse tensor product, truncated at total degree D
    std::map<MultiIndex, Complex> acc;
    acc[MultiIndex(0)] = 1.0; // grown one variable at a time
    for (int j = 0; j < n; ++j) {
        std::map<MultiIndex, Complex> next;
        for (const auto& [alpha, c] : acc) {
            const int used = total_degree(alpha);
            for (int d = 0; used + d <= D &&
                            d <= factors[static_cast<size_t>(j)].truncation_order;
                 ++d) {
                const Complex fc = factors[static_cast<size_t>(j)].c(d);
                if (fc == Complex(0.0)) continue;
                MultiIndex beta = alpha;
                beta.push_back(d);
                next[beta] += c * fc;
            }
        }
        acc = std::move(next);
    }
    for (const auto& [alpha, c] : acc)
        if (c != Complex(0.0)) F.set(alpha, c);
    F.max_degree = D;
    return F;
}

std::string MultiSeries::to_json() const {
    nlohmann::json j;
    j["n"] = dimension;
    j["D"] = max_degree;
    auto& entries = j["entries"] = nlohmann::json::array();
    for (const auto& [alpha, c] : coeffs)
        entries.push_back({alpha, c.real(), c.imag()});
    if (!tail_note.empty()) j["tail_note"] = tail_note;
    return j.dump();
}

MultiSeries MultiSeries::from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    MultiSeries F;
    F.dimension = j.at("n").get<int>();
    for (const auto& e : j.at("entries")) {
        MultiIndex alpha = e.at(0).get<MultiIndex>();
        F.set(alpha, Complex(e.at(1).get<double>(), e.at(2).get<double>()));
    }
    F.max_degree = j.at("D").get<int>();
    if (j.contains("tail_note")) F.tail_note = j["tail_note"].get<std::string>();
    return F;
}

std::string DRReport::to_json() const {
    nlohmann::json j;
    j["b_k"] = b_k;
    j["q"] = q;
    j["lhs_sum"] = lhs_sum;
    j["rhs"] = rhs;
    j["per_k_ok"] = per_k_ok;
    j["sum_ok"] = sum_ok;
    return j.dump();
}

std::string DRReport::csv_header() { return "n,seed,q,lhs_sum,rhs,all_k_ok,sum_ok"; }

std::string DRReport::csv_row(int n, std::uint64_t seed) const {
    std::ostringstream os;
    os.precision(17);
    const bool all_k =
        std::all_of(per_k_ok.begin(), per_k_ok.end(), [](bool b) { return b; });
    os << n << ',' << seed << ',' << q << ',' << lhs_sum << ',' << rhs << ','
       << (all_k ? 1 : 0) << ',' << (sum_ok ? 1 : 0);
    return os.str();
}

} // namespace bohr::multidim
