#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "oscdelta/asymptotics.hpp"
#include "oscdelta/bounds.hpp"
#include "oscdelta/eigensolver.hpp"
#include "oscdelta/hermite.hpp"
#include "oscdelta/ladder.hpp"
#include "oscdelta/potential.hpp"
#include "oscdelta/quadrature.hpp"
#include "oscdelta/traces.hpp"
#include "oscdelta/verify.hpp"

namespace py = pybind11;
using namespace oscdelta;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Spectra of the 1D harmonic oscillator perturbed by point interactions";

  // hermite
  m.def("hermite_eval", &hermite_eval, py::arg("n"), py::arg("x"));
  m.def("hermite_row", &hermite_row, py::arg("n_max"), py::arg("x"));
  m.def("hermite_squared_row", &hermite_squared_row, py::arg("k_max"), py::arg("b"));
  m.def("hermite_asymptotic", &hermite_asymptotic, py::arg("m"), py::arg("x"));
  py::class_<AsymptoticAmplitude>(m, "AsymptoticAmplitude")
      .def_readonly("k", &AsymptoticAmplitude::k)
      .def_readonly("b", &AsymptoticAmplitude::b)
      .def_readonly("leading", &AsymptoticAmplitude::leading)
      .def_readonly("correction", &AsymptoticAmplitude::correction);
  m.def("a_squared_expansion", &a_squared_expansion, py::arg("k"), py::arg("b"));

  // potential
  py::class_<DeltaTerm>(m, "DeltaTerm")
      .def(py::init<Complex, double>(), py::arg("coupling"), py::arg("location"))
      .def_readwrite("coupling", &DeltaTerm::coupling)
      .def_readwrite("location", &DeltaTerm::location);
  py::class_<PointPotential>(m, "PointPotential")
      .def(py::init<std::vector<DeltaTerm>>(), py::arg("terms"))
      .def_static("odd_pair", &PointPotential::odd_pair, py::arg("s"), py::arg("b"))
      .def_static("even_pair", &PointPotential::even_pair, py::arg("t"), py::arg("b"))
      .def_static("two_point", &PointPotential::two_point, py::arg("t"), py::arg("s"), py::arg("b"))
      .def_static("single", &PointPotential::single, py::arg("c"), py::arg("b"))
      .def_static("centered", &PointPotential::centered, py::arg("t"))
      .def_readonly("terms", &PointPotential::terms)
      .def("total_mass", &PointPotential::total_mass)
      .def("real_couplings", &PointPotential::real_couplings);
  py::class_<TwoPointForm>(m, "TwoPointForm")
      .def(py::init([](Complex t, Complex s, double b) { return TwoPointForm{t, s, b}; }),
           py::arg("t"), py::arg("s"), py::arg("b"))
      .def_readwrite("t", &TwoPointForm::t)
      .def_readwrite("s", &TwoPointForm::s)
      .def_readwrite("b", &TwoPointForm::b)
      .def("to_potential", &TwoPointForm::to_potential);
  m.def("matrix_element", &matrix_element, py::arg("w"), py::arg("j"), py::arg("k"));
  py::class_<TruncatedOperator>(m, "TruncatedOperator")
      .def_readonly("entries", &TruncatedOperator::entries)
      .def_readonly("potential", &TruncatedOperator::potential)
      .def_property_readonly("dim", &TruncatedOperator::dim);
  m.def("build_truncated", &build_truncated, py::arg("w"), py::arg("N"));
  m.def("decay_constant", &decay_constant, py::arg("w"), py::arg("scan_limit") = 512);

  // eigensolver + ladder
  py::class_<SpectrumResult>(m, "SpectrumResult")
      .def_readonly("eigenvalues", &SpectrumResult::eigenvalues)
      .def_readonly("truncation", &SpectrumResult::truncation)
      .def_readonly("residual_norm", &SpectrumResult::residual_norm);
  m.def("qr_eigenvalues",
        [](const Eigen::MatrixXcd& a) { return qr_eigenvalues(a, nullptr); }, py::arg("a"));
  m.def("eigenvalues",
        [](const TruncatedOperator& op) { return eigenvalues(op, nullptr); }, py::arg("op"));

  py::enum_<MatchStatus>(m, "MatchStatus")
      .value("matched", MatchStatus::Matched)
      .value("ambiguous", MatchStatus::Ambiguous)
      .value("missing", MatchStatus::Missing);
  py::class_<LadderEntry>(m, "LadderEntry")
      .def_readonly("n", &LadderEntry::n)
      .def_readonly("lam", &LadderEntry::lambda)
      .def_readonly("status", &LadderEntry::status)
      .def_readonly("in_square", &LadderEntry::in_square);
  py::class_<EigenLadder>(m, "EigenLadder")
      .def_readonly("n_lo", &EigenLadder::n_lo)
      .def_readonly("n_hi", &EigenLadder::n_hi)
      .def_readonly("entries", &EigenLadder::entries)
      .def("at", &EigenLadder::at, py::return_value_policy::reference_internal);
  m.def("ladder_match", &ladder_match, py::arg("spec"), py::arg("n_lo"), py::arg("n_hi"));
  py::class_<NonrealReport>(m, "NonrealReport")
      .def_readonly("count", &NonrealReport::count)
      .def_readonly("max_imag", &NonrealReport::max_imag)
      .def_readonly("values", &NonrealReport::values);
  m.def("count_nonreal", &count_nonreal, py::arg("spec"), py::arg("tol") = 1e-8);
  py::class_<TruncationRow>(m, "TruncationRow")
      .def_readonly("truncation", &TruncationRow::truncation)
      .def_readonly("lam", &TruncationRow::lambda)
      .def_readonly("status", &TruncationRow::status);
  py::class_<TruncationStudy>(m, "TruncationStudy")
      .def_readonly("n", &TruncationStudy::n)
      .def_readonly("rows", &TruncationStudy::rows)
      .def_readonly("diffs", &TruncationStudy::diffs)
      .def_readonly("cauchy", &TruncationStudy::cauchy);
  m.def("truncation_study", &truncation_study, py::arg("w"), py::arg("n"), py::arg("sizes"));

  // traces
  py::class_<TailedValue>(m, "TailedValue")
      .def_readonly("value", &TailedValue::value)
      .def_readonly("tail_bound", &TailedValue::tail_bound)
      .def_readonly("k_max", &TailedValue::k_max);
  m.def("t1", &t1, py::arg("n"), py::arg("w"));
  m.def("t2", &t2, py::arg("n"), py::arg("w"), py::arg("k_max"));
  m.def("t3", &t3, py::arg("n"), py::arg("w"), py::arg("k_max"));
  m.def("parity_cross_term", &parity_cross_term, py::arg("n"), py::arg("even_w"),
        py::arg("odd_w"), py::arg("k_max"));
  py::class_<ContourSpec>(m, "ContourSpec")
      .def(py::init([](int n, int truncation, int pps, double tol) {
             ContourSpec s;
             s.n = n;
             s.truncation = truncation;
             s.points_per_side = pps;
             s.tol = tol;
             return s;
           }),
           py::arg("n"), py::arg("truncation"), py::arg("points_per_side") = 64,
           py::arg("tol") = 1e-9)
      .def_readwrite("n", &ContourSpec::n)
      .def_readwrite("truncation", &ContourSpec::truncation)
      .def_readwrite("points_per_side", &ContourSpec::points_per_side)
      .def_readwrite("tol", &ContourSpec::tol);
  m.def("tj_contour", &tj_contour, py::arg("n"), py::arg("w"), py::arg("j"), py::arg("spec"));
  py::class_<TraceSeries>(m, "TraceSeries")
      .def_readonly("n", &TraceSeries::n)
      .def_readonly("t1", &TraceSeries::t1)
      .def_readonly("t2", &TraceSeries::t2)
      .def_readonly("t3", &TraceSeries::t3)
      .def_readonly("remainder_bound", &TraceSeries::remainder_bound)
      .def_readonly("lambda_estimate", &TraceSeries::lambda_estimate)
      .def_readonly("tail_t2", &TraceSeries::tail_t2)
      .def_readonly("tail_t3", &TraceSeries::tail_t3)
      .def_readonly("n_star_threshold", &TraceSeries::n_star_threshold)
      .def_readonly("below_threshold", &TraceSeries::below_threshold);
  m.def("lambda_series", &lambda_series, py::arg("n"), py::arg("w"), py::arg("q"),
        py::arg("alpha"), py::arg("C0"), py::arg("k_max") = -1);

  // asymptotics
  m.def("kappa", &kappa, py::arg("n"), py::arg("b"));
  py::class_<ChiZetaOmega>(m, "ChiZetaOmega")
      .def_readonly("chi", &ChiZetaOmega::chi)
      .def_readonly("zeta", &ChiZetaOmega::zeta)
      .def_readonly("omega", &ChiZetaOmega::omega);
  m.def("chi_zeta_omega", &chi_zeta_omega, py::arg("n"), py::arg("b"));
  py::enum_<ZetaVariant>(m, "ZetaVariant")
      .value("b_squared_over_three", ZetaVariant::BSquaredOverThree)
      .value("b_cubed_over_three", ZetaVariant::BCubedOverThree);
  py::enum_<CoefficientForm>(m, "CoefficientForm")
      .value("trace_derived", CoefficientForm::TraceDerived)
      .value("printed_646", CoefficientForm::Printed646)
      .value("printed_640", CoefficientForm::Printed640);
  py::enum_<ModelKind>(m, "ModelKind")
      .value("odd_pair", ModelKind::OddPair)
      .value("even_pair", ModelKind::EvenPair)
      .value("mixed_pair", ModelKind::MixedPair)
      .value("single_offcenter", ModelKind::SingleOffcenter)
      .value("single_center", ModelKind::SingleCenter);
  py::class_<AsymptoticModel>(m, "AsymptoticModel")
      .def(py::init([](ModelKind kind, Complex t, Complex s, double b, ZetaVariant v,
                       CoefficientForm f) {
             AsymptoticModel mm;
             mm.kind = kind;
             mm.t = t;
             mm.s = s;
             mm.b = b;
             mm.zeta_variant = v;
             mm.form = f;
             mm.validate();
             return mm;
           }),
           py::arg("kind"), py::arg("t") = Complex(0.0, 0.0), py::arg("s") = Complex(0.0, 0.0),
           py::arg("b") = 1.0, py::arg("zeta_variant") = ZetaVariant::BSquaredOverThree,
           py::arg("form") = CoefficientForm::TraceDerived)
      .def_readwrite("kind", &AsymptoticModel::kind)
      .def_readwrite("t", &AsymptoticModel::t)
      .def_readwrite("s", &AsymptoticModel::s)
      .def_readwrite("b", &AsymptoticModel::b)
      .def_readwrite("zeta_variant", &AsymptoticModel::zeta_variant)
      .def_readwrite("form", &AsymptoticModel::form);
  py::class_<AsymptoticValue>(m, "AsymptoticValue")
      .def_readonly("value", &AsymptoticValue::value)
      .def_readonly("error_band", &AsymptoticValue::error_band);
  m.def("lambda_asymptotic", &lambda_asymptotic, py::arg("model"), py::arg("n"),
        py::arg("band_constant") = 1.0);
  py::enum_<AuxSumKind>(m, "AuxSumKind")
      .value("sigma_tilde", AuxSumKind::SigmaTilde)
      .value("sigma_prime", AuxSumKind::SigmaPrime)
      .value("tau_prime", AuxSumKind::TauPrime)
      .value("xi", AuxSumKind::Xi)
      .value("eta", AuxSumKind::Eta);
  py::class_<AuxSumValue>(m, "AuxSumValue")
      .def_readonly("n", &AuxSumValue::n)
      .def_readonly("value", &AuxSumValue::value)
      .def_readonly("tail_bound", &AuxSumValue::tail_bound)
      .def_readonly("k_max", &AuxSumValue::k_max);
  m.def("aux_sum", &aux_sum, py::arg("kind"), py::arg("n"), py::arg("b"), py::arg("k_max"));
  py::class_<ConstantAB>(m, "ConstantAB")
      .def_readonly("closed_form", &ConstantAB::closed_form)
      .def_readonly("quad_i1", &ConstantAB::quad_i1)
      .def_readonly("quad_i2", &ConstantAB::quad_i2);
  m.def("constant_AB", &constant_AB);

  // bounds
  m.def("m_alpha", &m_alpha, py::arg("alpha"));
  py::class_<HsNormValue>(m, "HsNormValue")
      .def_readonly("value", &HsNormValue::value)
      .def_readonly("tail_bound", &HsNormValue::tail_bound)
      .def_readonly("k_max", &HsNormValue::k_max);
  m.def("hs_norm", &hs_norm, py::arg("w"), py::arg("n"), py::arg("z"), py::arg("k_max"));
  py::class_<MuSumValue>(m, "MuSumValue")
      .def_readonly("value", &MuSumValue::value)
      .def_readonly("tail_bound", &MuSumValue::tail_bound);
  m.def("mu_sum", &mu_sum, py::arg("n"), py::arg("z"), py::arg("alpha"), py::arg("k_max"));
  py::class_<ThresholdResult>(m, "ThresholdResult")
      .def_readonly("t", &ThresholdResult::t)
      .def_readonly("beta", &ThresholdResult::beta)
      .def_readonly("X", &ThresholdResult::X)
      .def_readonly("upper", &ThresholdResult::upper)
      .def_readonly("residual", &ThresholdResult::residual);
  m.def("x_beta_solve", &x_beta_solve, py::arg("t"), py::arg("beta"), py::arg("A") = 128.0);
  m.def("n_star", &n_star, py::arg("C0"), py::arg("alpha"), py::arg("A") = 128.0);
  py::enum_<NonrealCase>(m, "NonrealCase")
      .value("p_gt_2", NonrealCase::PGreaterThan2)
      .value("p_eq_2", NonrealCase::PEquals2)
      .value("p_lt_2", NonrealCase::PLessThan2)
      .value("point", NonrealCase::Point);
  m.def("nonreal_bound", &nonreal_bound, py::arg("gamma"), py::arg("case"), py::arg("nu"),
        py::arg("C"), py::arg("p") = 3.0);
  m.def("pt_count_bound", &pt_count_bound, py::arg("gamma"), py::arg("C"));

  // verify
  py::class_<CriterionResult>(m, "CriterionResult")
      .def_readonly("id", &CriterionResult::id)
      .def_readonly("name", &CriterionResult::name)
      .def_readonly("pass_", &CriterionResult::pass)
      .def_readonly("metrics", &CriterionResult::metrics)
      .def_readonly("note", &CriterionResult::note);
  m.def("run_criterion", &run_criterion, py::arg("id"));

  m.attr("__version__") = "0.1.0";
}
