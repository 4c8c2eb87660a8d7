#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hopfield/bounds.hpp"
#include "hopfield/ensemble.hpp"
#include "hopfield/erfc.hpp"
#include "hopfield/errors.hpp"
#include "hopfield/exact.hpp"
#include "hopfield/instance.hpp"
#include "hopfield/rng.hpp"
#include "hopfield/search.hpp"

namespace py = pybind11;
using namespace hopfield;

PYBIND11_MODULE(_hopfield, m) {
  m.doc() = "Ground-state bounds and solvers for positive/negative Hopfield forms";

  py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

  py::enum_<Form>(m, "Form")
      .value("Positive", Form::Positive)
      .value("Negative", Form::Negative);
  py::enum_<Ensemble>(m, "Ensemble")
      .value("Gaussian", Ensemble::Gaussian)
      .value("Bernoulli", Ensemble::Bernoulli)
      .value("Explicit", Ensemble::Explicit);
  py::enum_<Method>(m, "Method")
      .value("ExactGray", Method::ExactGray)
      .value("ExactNaive", Method::ExactNaive)
      .value("BitFlip", Method::BitFlip);
  py::enum_<Strategy>(m, "Strategy")
      .value("Steepest", Strategy::Steepest)
      .value("FirstImprovement", Strategy::FirstImprovement);

  m.def("erfc", &hopfield::erfc, py::arg("x"));
  m.def("mix_seed", &mix_seed, py::arg("seed"), py::arg("index"));

  py::class_<BaselineBounds>(m, "BaselineBounds")
      .def_readonly("upper", &BaselineBounds::upper)
      .def_readonly("lower", &BaselineBounds::lower);
  py::class_<BoundResult>(m, "BoundResult")
      .def_readonly("form", &BoundResult::form)
      .def_readonly("alpha", &BoundResult::alpha)
      .def_readonly("c3_star", &BoundResult::c3_star)
      .def_readonly("gamma_hat", &BoundResult::gamma_hat)
      .def_readonly("value", &BoundResult::value)
      .def_readonly("baseline", &BoundResult::baseline)
      .def_readonly("evaluations", &BoundResult::evaluations);

  m.def("baseline_bounds", &baseline_bounds, py::arg("alpha"));
  m.def("gamma_hat", &gamma_hat, py::arg("c3"), py::arg("alpha"), py::arg("form"));
  m.def("positive_objective", &positive_objective, py::arg("c3"), py::arg("alpha"));
  m.def("negative_objective", &negative_objective, py::arg("c3"), py::arg("alpha"));
  m.def("lifted_upper_bound", &lifted_upper_bound, py::arg("alpha"));
  m.def("lifted_lower_bound", &lifted_lower_bound, py::arg("alpha"));
  m.def(
      "minimize_scalar",
      [](const std::function<double(double)>& f, double lo, double hi, double tol) {
        const MinimizeResult r = minimize_scalar(f, lo, hi, tol);
        return py::make_tuple(r.x_star, r.f_star, r.evaluations);
      },
      py::arg("f"), py::arg("lo"), py::arg("hi"), py::arg("tol") = 1e-10);

  py::class_<SpinVector>(m, "SpinVector")
      .def(py::init([](const std::string& s) { return parse_spins(s); }))
      .def_property_readonly("signs",
                             [](const SpinVector& s) {
                               std::vector<int> out(s.signs.begin(), s.signs.end());
                               return out;
                             })
      .def("__len__", &SpinVector::size)
      .def("__str__", &SpinVector::to_string);

  py::class_<HopfieldInstance>(m, "HopfieldInstance")
      .def_readonly("m", &HopfieldInstance::m)
      .def_readonly("n", &HopfieldInstance::n)
      .def_readonly("entries", &HopfieldInstance::entries)
      .def_readonly("ensemble", &HopfieldInstance::ensemble)
      .def_readonly("seed", &HopfieldInstance::seed)
      .def("at", &HopfieldInstance::at, py::arg("i"), py::arg("j"));

  m.def("make_instance", &make_instance, py::arg("m"), py::arg("n"), py::arg("entries"));
  m.def("sample_instance", &sample_instance, py::arg("m"), py::arg("n"), py::arg("ensemble"),
        py::arg("seed"));
  m.def("evaluate", &evaluate, py::arg("instance"), py::arg("spins"));
  m.def("read_matrix_file", &read_matrix_file, py::arg("path"));

  py::class_<GroundStateResult>(m, "GroundStateResult")
      .def_readonly("form", &GroundStateResult::form)
      .def_readonly("value", &GroundStateResult::value)
      .def_readonly("witness", &GroundStateResult::witness)
      .def_readonly("normalized", &GroundStateResult::normalized)
      .def_readonly("states_visited", &GroundStateResult::states_visited)
      .def_readonly("method", &GroundStateResult::method)
      .def_readonly("hit_sweep_limit", &GroundStateResult::hit_sweep_limit);

  m.def("exact_ground_state", &exact_ground_state, py::arg("instance"), py::arg("form"),
        py::arg("limit") = kDefaultEnumerationLimit, py::arg("threads") = 0,
        py::call_guard<py::gil_scoped_release>());
  m.def("exact_ground_state_naive", &exact_ground_state_naive, py::arg("instance"),
        py::arg("form"), py::arg("limit") = 16, py::call_guard<py::gil_scoped_release>());

  py::class_<SearchConfig>(m, "SearchConfig")
      .def(py::init([](int restarts, Strategy strategy, int max_sweeps, std::uint64_t seed) {
             SearchConfig c;
             c.restarts = restarts;
             c.strategy = strategy;
             c.max_sweeps = max_sweeps;
             c.seed = seed;
             return c;
           }),
           py::arg("restarts") = 1, py::arg("strategy") = Strategy::Steepest,
           py::arg("max_sweeps") = 1000, py::arg("seed") = 0)
      .def_readwrite("restarts", &SearchConfig::restarts)
      .def_readwrite("strategy", &SearchConfig::strategy)
      .def_readwrite("max_sweeps", &SearchConfig::max_sweeps)
      .def_readwrite("seed", &SearchConfig::seed);

  m.def("bit_flip_search", &bit_flip_search, py::arg("instance"), py::arg("form"),
        py::arg("config"), py::arg("threads") = 0, py::call_guard<py::gil_scoped_release>());

  py::class_<EnsembleConfig>(m, "EnsembleConfig")
      .def(py::init<>())
      .def_readwrite("n", &EnsembleConfig::n)
      .def_readwrite("alpha", &EnsembleConfig::alpha)
      .def_readwrite("trials", &EnsembleConfig::trials)
      .def_readwrite("ensemble", &EnsembleConfig::ensemble)
      .def_readwrite("method", &EnsembleConfig::method)
      .def_readwrite("form", &EnsembleConfig::form)
      .def_readwrite("seed", &EnsembleConfig::seed)
      .def_readwrite("search", &EnsembleConfig::search)
      .def_readwrite("enumeration_limit", &EnsembleConfig::enumeration_limit);

  py::class_<EnsembleSummary>(m, "EnsembleSummary")
      .def_readonly("m", &EnsembleSummary::m)
      .def_readonly("trial_seeds", &EnsembleSummary::trial_seeds)
      .def_readonly("values", &EnsembleSummary::values)
      .def_readonly("normalized", &EnsembleSummary::normalized)
      .def_readonly("mean", &EnsembleSummary::mean)
      .def_readonly("stddev", &EnsembleSummary::stddev)
      .def_readonly("stderr", &EnsembleSummary::stderr_)
      .def_readonly("bound", &EnsembleSummary::bound)
      .def_readonly("baseline", &EnsembleSummary::baseline)
      .def_readonly("violations", &EnsembleSummary::violations)
      .def_readonly("gaussian_proof_caveat", &EnsembleSummary::gaussian_proof_caveat)
      .def("to_json_str", [](const EnsembleSummary& s) { return to_json(s).dump(2); });

  m.def("run_ensemble", &run_ensemble, py::arg("config"),
        py::call_guard<py::gil_scoped_release>());

  py::class_<ComparisonSpec>(m, "ComparisonSpec")
      .def(py::init<>())
      .def_readwrite("n", &ComparisonSpec::n)
      .def_readwrite("m", &ComparisonSpec::m)
      .def_readwrite("num_pairs", &ComparisonSpec::num_pairs)
      .def_readwrite("samples", &ComparisonSpec::samples)
      .def_readwrite("c3", &ComparisonSpec::c3);

  py::class_<ComparisonSample>(m, "ComparisonSample")
      .def_readonly("form", &ComparisonSample::form)
      .def_readonly("seed", &ComparisonSample::seed)
      .def_readonly("lhs_mean", &ComparisonSample::lhs_mean)
      .def_readonly("rhs_mean", &ComparisonSample::rhs_mean)
      .def_readonly("lhs_stderr", &ComparisonSample::lhs_stderr)
      .def_readonly("rhs_stderr", &ComparisonSample::rhs_stderr);

  m.def("comparison_smoke_test", &comparison_smoke_test, py::arg("spec"), py::arg("form"),
        py::arg("seed"), py::call_guard<py::gil_scoped_release>());

  py::class_<ConcentrationRow>(m, "ConcentrationRow")
      .def_readonly("n", &ConcentrationRow::n)
      .def_readonly("mean", &ConcentrationRow::mean)
      .def_readonly("stddev", &ConcentrationRow::stddev);

  py::class_<ConcentrationReport>(m, "ConcentrationReport")
      .def_readonly("rows", &ConcentrationReport::rows)
      .def_readonly("stddev_decreasing", &ConcentrationReport::stddev_decreasing);

  m.def("concentration_report", &concentration_report, py::arg("config"), py::arg("n_grid"),
        py::call_guard<py::gil_scoped_release>());

  m.def("rows_for", &rows_for, py::arg("alpha"), py::arg("n"));
}
