#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bohr/functionals.hpp"
#include "bohr/multidim.hpp"
#include "bohr/radii.hpp"
#include "bohr/series.hpp"
#include "bohr/sharpness.hpp"

namespace py = pybind11;
using namespace bohr;

PYBIND11_MODULE(_bohr, m) {
    m.doc() = "Bohr-type radii, refined/improved Bohr functionals, and "
              "sharpness certification on the disk and polydisk";

    // series
    py::class_<series::CoefficientSeries>(m, "CoefficientSeries")
        .def_readonly("coeffs", &series::CoefficientSeries::coeffs)
        .def_readonly("truncation_order",
                      &series::CoefficientSeries::truncation_order)
        .def_readonly("tail_coeff_bound",
                      &series::CoefficientSeries::tail_coeff_bound)
        .def_readonly("label", &series::CoefficientSeries::label)
        .def("to_json",
             [](const series::CoefficientSeries& f) { return to_json(f); });
    py::class_<series::ModulusInterval>(m, "ModulusInterval")
        .def_readonly("lower", &series::ModulusInterval::lower)
        .def_readonly("upper", &series::ModulusInterval::upper);

    m.def("moebius_series", &series::moebius_series, py::arg("a"),
          py::arg("M") = series::kDefaultTruncation);
    m.def("shifted_moebius_series", &series::shifted_moebius_series,
          py::arg("a"), py::arg("M") = series::kDefaultTruncation);
    m.def("blaschke_series", &series::blaschke_series, py::arg("zeros"),
          py::arg("rotation") = 0.0,
          py::arg("M") = series::kDefaultTruncation);
    m.def("schur_series", &series::schur_series, py::arg("params"),
          py::arg("M") = series::kDefaultTruncation);
    m.def("eval_modulus", &series::eval_modulus, py::arg("f"), py::arg("z"));

    // functionals
    py::class_<functionals::FunctionalReport>(m, "FunctionalReport")
        .def_readonly("lhs_value", &functionals::FunctionalReport::lhs_value)
        .def_readonly("lhs_components",
                      &functionals::FunctionalReport::lhs_components)
        .def_readonly("rhs_value", &functionals::FunctionalReport::rhs_value)
        .def_readonly("truncation_error",
                      &functionals::FunctionalReport::truncation_error)
        .def_readonly("margin", &functionals::FunctionalReport::margin)
        .def_readonly("r", &functionals::FunctionalReport::r)
        .def_readonly("a", &functionals::FunctionalReport::a)
        .def_readonly("out_of_theorem_range",
                      &functionals::FunctionalReport::out_of_theorem_range)
        .def("to_json", &functionals::FunctionalReport::to_json);

    m.def("bohr_tail",
          [](const series::CoefficientSeries& f, double r, int N) {
              const auto s = functionals::bohr_tail(f, r, N);
              return std::make_pair(s.value, s.error);
          },
          py::arg("f"), py::arg("r"), py::arg("N") = 0);
    m.def("quadratic_term",
          [](const series::CoefficientSeries& f, double r) {
              const auto s = functionals::quadratic_term(f, r);
              return std::make_pair(s.value, s.error);
          });
    m.def("classical_report", &functionals::classical_report);
    m.def("refined_a_report", &functionals::refined_a_report);
    m.def("refined_b_report", &functionals::refined_b_report);
    m.def("bombieri_report", &functionals::bombieri_report);
    m.def("improved_report", &functionals::improved_report, py::arg("f"),
          py::arg("z"), py::arg("p") = 1.0, py::arg("N") = 1);
    m.def("refined_improved_report", &functionals::refined_improved_report,
          py::arg("f"), py::arg("z"), py::arg("p") = 1.0);

    // radii
    py::class_<radii::RadiusResult>(m, "RadiusResult")
        .def_readonly("kind", &radii::RadiusResult::kind)
        .def_readonly("value", &radii::RadiusResult::value)
        .def_readonly("residual", &radii::RadiusResult::residual)
        .def_property_readonly("method",
                               [](const radii::RadiusResult& r) {
                                   return r.method == radii::Method::closed_form
                                              ? "closed_form"
                                              : "bisection";
                               })
        .def("to_json", &radii::RadiusResult::to_json);

    m.def("radius_r_p", &radii::radius_r_p, py::arg("a"), py::arg("p"));
    m.def("equation_A", &radii::equation_A);
    m.def("radius_R_Np", &radii::radius_R_Np, py::arg("N"), py::arg("p"));
    m.def("radius_R_p", &radii::radius_R_p, py::arg("p"));
    m.def("radius_r_ap", &radii::radius_r_ap, py::arg("a"), py::arg("p"));
    m.def("radius_r_a2", &radii::radius_r_a2, py::arg("a"));
    m.def("psi", &radii::psi);
    m.def("q_sharpness", &radii::q_sharpness);
    m.def("q_sharpness_limit", &radii::q_sharpness_limit);

    // multidim
    py::class_<multidim::MultiSeries>(m, "MultiSeries")
        .def_readonly("dimension", &multidim::MultiSeries::dimension)
        .def_readonly("max_degree", &multidim::MultiSeries::max_degree)
        .def("at", &multidim::MultiSeries::at)
        .def("to_json", &multidim::MultiSeries::to_json);
    py::class_<multidim::MajorantSums>(m, "MajorantSums")
        .def_readonly("slice_sum", &multidim::MajorantSums::slice_sum)
        .def_readonly("full_sum", &multidim::MajorantSums::full_sum)
        .def_readonly("quad_sum", &multidim::MajorantSums::quad_sum);
    py::class_<multidim::DRReport>(m, "DRReport")
        .def_readonly("b_k", &multidim::DRReport::b_k)
        .def_readonly("lhs_sum", &multidim::DRReport::lhs_sum)
        .def_readonly("rhs", &multidim::DRReport::rhs)
        .def_readonly("sum_ok", &multidim::DRReport::sum_ok)
        .def("to_json", &multidim::DRReport::to_json);
    py::class_<multidim::BoundPair>(m, "BoundPair")
        .def_readonly("lower", &multidim::BoundPair::lower)
        .def_readonly("upper", &multidim::BoundPair::upper)
        .def_readonly("upper_vacuous", &multidim::BoundPair::upper_vacuous);

    m.def("restrict_to_line", &multidim::restrict_to_line, py::arg("F"),
          py::arg("direction"), py::arg("tail_coeff_bound") = 0.0);
    m.def("homogeneous_majorants", &multidim::homogeneous_majorants);
    m.def("dr_check", &multidim::dr_check, py::arg("F"), py::arg("q") = 2.0);
    m.def("kn_bounds", &multidim::kn_bounds);
    m.def("kn0_bounds", &multidim::kn0_bounds);
    m.def("majorant_envelope", &multidim::majorant_envelope);
    m.def("two_variable_extremal", &multidim::two_variable_extremal,
          py::arg("a"), py::arg("D") = multidim::kDefaultDegreeCap);
    m.def("compose_linear", &multidim::compose_linear);
    m.def("factor_product", &multidim::factor_product);
    m.def("sample_polydisk_bounded",
          [](int n, std::uint64_t seed, const std::string& construction,
             int degree_cap, bool force_zero_constant) {
              multidim::SampleSpec spec;
              spec.construction =
                  construction == "product"
                      ? multidim::SampleConstruction::factor_product
                      : multidim::SampleConstruction::line_composition;
              spec.degree_cap = degree_cap;
              spec.force_zero_constant = force_zero_constant;
              return multidim::sample_polydisk_bounded(n, seed, spec);
          },
          py::arg("n"), py::arg("seed"), py::arg("construction") = "line",
          py::arg("degree_cap") = 12, py::arg("force_zero_constant") = false);

    // sharpness
    py::class_<sharpness::WitnessReport>(m, "WitnessReport")
        .def_readonly("r", &sharpness::WitnessReport::r)
        .def_readonly("found", &sharpness::WitnessReport::found)
        .def_readonly("witness", &sharpness::WitnessReport::witness)
        .def_readonly("witness_parameter",
                      &sharpness::WitnessReport::witness_parameter)
        .def_readonly("functional_value",
                      &sharpness::WitnessReport::functional_value)
        .def_readonly("excess", &sharpness::WitnessReport::excess)
        .def_readonly("truncation_error",
                      &sharpness::WitnessReport::truncation_error)
        .def("to_json", &sharpness::WitnessReport::to_json);
    py::class_<sharpness::CampaignReport>(m, "CampaignReport")
        .def_readonly("kind", &sharpness::CampaignReport::kind)
        .def_readonly("r", &sharpness::CampaignReport::r)
        .def_readonly("trials", &sharpness::CampaignReport::trials)
        .def_readonly("seed", &sharpness::CampaignReport::seed)
        .def_readonly("violations", &sharpness::CampaignReport::violations)
        .def_readonly("worst_margin", &sharpness::CampaignReport::worst_margin)
        .def("to_json", &sharpness::CampaignReport::to_json);

    m.def("radius_for",
          [](const std::string& kind, double p, int N) {
              return sharpness::radius_for(functionals::kind_from_name(kind),
                                           {p, N});
          },
          py::arg("kind"), py::arg("p") = 1.0, py::arg("N") = 1);
    m.def("find_witness",
          [](const std::string& kind, double r, double p, int N) {
              return sharpness::find_witness(functionals::kind_from_name(kind),
                                             r, {p, N});
          },
          py::arg("kind"), py::arg("r"), py::arg("p") = 1.0, py::arg("N") = 1);
    m.def("falsify_campaign",
          [](const std::string& kind, double r, std::uint64_t trials,
             std::uint64_t seed, double p, int N, int truncation_order) {
              return sharpness::falsify_campaign(
                  functionals::kind_from_name(kind), r, trials, seed, {p, N},
                  truncation_order);
          },
          py::arg("kind"), py::arg("r"), py::arg("trials"), py::arg("seed"),
          py::arg("p") = 1.0, py::arg("N") = 1,
          py::arg("truncation_order") = 128);
    m.def("dr_campaign", &sharpness::dr_campaign, py::arg("n"), py::arg("q"),
          py::arg("trials"), py::arg("seed"), py::arg("degree_cap") = 12);
    m.def("kn0_campaign", &sharpness::kn0_campaign, py::arg("n"),
          py::arg("trials"), py::arg("seed"), py::arg("degree_cap") = 12);
}
