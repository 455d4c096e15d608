// Copyright 2026 The varbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sstream>

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "varbound/bounds.hpp"
#include "varbound/catalog.hpp"
#include "varbound/linalg.hpp"
#include "varbound/optimizer.hpp"
#include "varbound/runner.hpp"
#include "varbound/variance.hpp"
#include "varbound/version.hpp"

namespace py = pybind11;
using namespace varbound;

namespace {

void bind_linalg(py::module_& m) {
  py::class_<Observable>(m, "Observable")
      .def_property_readonly("dim", &Observable::dim)
      .def_property_readonly("matrix", &Observable::matrix)
      .def_property_readonly("label", &Observable::label)
      .def("__repr__", [](const Observable& a) {
        return "<Observable '" + a.label() + "' dim=" + std::to_string(a.dim()) + ">";
      });

  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def_property_readonly("dim", &DensityMatrix::dim)
      .def_property_readonly("matrix", &DensityMatrix::matrix);

  py::class_<ObservableSet>(m, "ObservableSet")
      .def(py::init<std::vector<Observable>>(), py::arg("members"))
      .def_property_readonly("dim", &ObservableSet::dim)
      .def("__len__", &ObservableSet::size)
      .def("__getitem__", [](const ObservableSet& s, std::size_t i) {
        if (i >= s.size()) throw py::index_error();
        return s[i];
      });

  m.def("validate_observable", &validate_observable, py::arg("matrix"),
        py::arg("label") = "");
  m.def("validate_density", &validate_density, py::arg("matrix"));
  m.def("pure_state", &pure_state, py::arg("psi"));
  m.def("eig_hermitian", [](const ComplexMatrix& a) {
    EigenSystem es = eig_hermitian(a);
    return py::make_tuple(es.values, es.vectors);
  }, py::arg("matrix"));
  m.def("matrix_sqrt_psd", &matrix_sqrt_psd, py::arg("rho"));
  m.def("kron", &kron, py::arg("a"), py::arg("b"));
  m.def("vectorize", &vectorize, py::arg("g"));
  m.def("is_common_eigenvector", &is_common_eigenvector, py::arg("set"), py::arg("psi"));
}

void bind_variance(py::module_& m) {
  m.def("mean_value", &mean_value, py::arg("rho"), py::arg("a"));
  m.def("variance", &variance, py::arg("rho"), py::arg("a"));
  m.def("stddev", &stddev, py::arg("rho"), py::arg("a"));
  m.def("variance_via_vectorization", &variance_via_vectorization, py::arg("rho"),
        py::arg("a"));
  m.def("linear_combo",
        [](const std::vector<double>& coeffs, const ObservableSet& set,
           const std::vector<std::size_t>& subset) {
          return linear_combo(coeffs, set, subset);
        },
        py::arg("coeffs"), py::arg("set"), py::arg("subset"));
}

void bind_bounds(py::module_& m) {
  py::enum_<BoundFamily>(m, "BoundFamily")
      .value("SUM", BoundFamily::kSum)
      .value("SONG", BoundFamily::kSong)
      .value("ZHANG", BoundFamily::kZhang)
      .value("LB1", BoundFamily::kLb1)
      .value("LB1_PI", BoundFamily::kLb1Pi)
      .value("THM2_X", BoundFamily::kThm2X)
      .value("THM2_Y", BoundFamily::kThm2Y)
      .value("THM2_Z", BoundFamily::kThm2Z)
      .value("LB2", BoundFamily::kLb2);

  py::class_<BranchChoice>(m, "BranchChoice")
      .def_readonly("x", &BranchChoice::x)
      .def_readonly("y", &BranchChoice::y)
      .def("__repr__", [](const BranchChoice& b) {
        return "BranchChoice(x=" + std::to_string(b.x) + ", y=" + std::to_string(b.y) + ")";
      });

  py::class_<BoundEvaluation>(m, "BoundEvaluation")
      .def_readonly("family", &BoundEvaluation::family)
      .def_readonly("value", &BoundEvaluation::value)
      .def_readonly("alpha", &BoundEvaluation::alpha)
      .def_readonly("beta", &BoundEvaluation::beta)
      .def_readonly("branch", &BoundEvaluation::branch)
      .def_readonly("permutation", &BoundEvaluation::permutation)
      .def_readonly("lb2_member", &BoundEvaluation::lb2_member)
      .def("__repr__", [](const BoundEvaluation& e) {
        return "<BoundEvaluation " + std::string(family_name(e.family)) + " " +
               format_real(e.value) + ">";
      });

  m.attr("PERMUTATION_MAX") = kPermutationMax;
  m.def("sum_variances", &sum_variances, py::arg("rho"), py::arg("set"));
  m.def("song_bound", &song_bound, py::arg("rho"), py::arg("set"));
  m.def("zhang_bound", &zhang_bound, py::arg("rho"), py::arg("set"));
  m.def("lb1", &lb1, py::arg("rho"), py::arg("set"), py::arg("alpha"));
  m.def("lb1_permuted", &lb1_permuted, py::arg("rho"), py::arg("set"), py::arg("alpha"));
  m.def("thm2_bounds", [](const DensityMatrix& rho, const ObservableSet& set, double a,
                          double b) {
    Thm2Bounds t = thm2_bounds(rho, set, a, b);
    return py::make_tuple(t.x, t.y, t.z);
  }, py::arg("rho"), py::arg("set"), py::arg("alpha"), py::arg("beta"));
  m.def("lb2", &lb2, py::arg("rho"), py::arg("set"), py::arg("alpha"), py::arg("beta"));
}

void bind_optimizer(py::module_& m) {
  py::class_<GridSpec>(m, "GridSpec")
      .def(py::init([](int min_exponent, int max_exponent, int points_per_octave,
                       bool refine) {
             return GridSpec{min_exponent, max_exponent, points_per_octave, refine};
           }),
           py::arg("min_exponent") = -6, py::arg("max_exponent") = 6,
           py::arg("points_per_octave") = 20, py::arg("refine") = false)
      .def_readwrite("min_exponent", &GridSpec::min_exponent)
      .def_readwrite("max_exponent", &GridSpec::max_exponent)
      .def_readwrite("points_per_octave", &GridSpec::points_per_octave)
      .def_readwrite("refine", &GridSpec::refine)
      .def("points", &GridSpec::points);

  py::class_<OptimizationResult>(m, "OptimizationResult")
      .def_readonly("best", &OptimizationResult::best)
      .def_readonly("evaluations", &OptimizationResult::evaluations)
      .def_readonly("grid", &OptimizationResult::grid);

  m.def("optimize_lb1", &optimize_lb1, py::arg("rho"), py::arg("set"),
        py::arg("grid") = GridSpec{});
  m.def("optimize_lb2", &optimize_lb2, py::arg("rho"), py::arg("set"),
        py::arg("grid") = GridSpec{});
  m.def("optimize_lb1_permuted", &optimize_lb1_permuted, py::arg("rho"), py::arg("set"),
        py::arg("grid") = GridSpec{});
  m.def("compare_report", &compare_report, py::arg("rho"), py::arg("set"),
        py::arg("grid") = GridSpec{}, py::arg("include_permutations") = false);
}

void bind_catalog(py::module_& m) {
  py::enum_<Axis>(m, "Axis").value("X", Axis::kX).value("Y", Axis::kY).value("Z", Axis::kZ);

  m.def("pauli", &pauli, py::arg("axis"));
  m.def("angular_momentum", &angular_momentum, py::arg("axis"));
  m.def("bloch_state", &bloch_state, py::arg("r"));
  m.def("isotropic_state", &isotropic_state, py::arg("d"), py::arg("theta"));
  m.def("spin1_pure", &spin1_pure, py::arg("theta"), py::arg("phi"));
  m.def("example_set", &example_set, py::arg("id"));
  m.def("example_state", [](int id, double theta, double phi) {
    return example_state({.id = id, .theta = theta, .phi = phi});
  }, py::arg("id"), py::arg("theta"), py::arg("phi") = 0.0);
  m.def("random_instance", [](int dim, int n_obs, std::uint64_t seed) {
    RandomInstance r = random_instance(dim, n_obs, seed);
    return py::make_tuple(r.rho, r.set);
  }, py::arg("dim"), py::arg("n_obs"), py::arg("seed"));
}

void bind_runner(py::module_& m) {
  m.def("_sweep_csv",
        [](int example, std::optional<double> theta_min, std::optional<double> theta_max,
           std::optional<int> steps, std::optional<double> phi,
           std::optional<double> alpha_fixed, const GridSpec& grid, bool permutations) {
          SweepOptions o{.example = example,
                         .theta_min = theta_min,
                         .theta_max = theta_max,
                         .steps = steps,
                         .phi = phi,
                         .alpha_fixed = alpha_fixed,
                         .grid = grid,
                         .permutations = permutations};
          SweepResult r;
          {
            py::gil_scoped_release release;
            r = run_sweep(o);
          }
          std::ostringstream out;
          write_sweep_csv(out, r);
          return out.str();
        });
  m.def("_audit_json",
        [](const std::vector<int>& dims, const std::vector<int>& n_obs, int trials,
           std::uint64_t seed, const GridSpec& grid) {
          AuditOptions o{.dims = dims, .n_obs = n_obs, .trials = trials, .seed = seed, .grid = grid};
          AuditReport r;
          {
            py::gil_scoped_release release;
            r = run_audit(o);
          }
          return audit_report_json(r).dump();
        });
  m.def("_bounds_json",
        [](int example, double theta, double phi, const GridSpec& grid, bool permutations,
           std::optional<double> alpha_fixed) {
          return bounds_report_json({.id = example, .theta = theta, .phi = phi}, grid,
                                    permutations, alpha_fixed)
              .dump();
        });
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Variance-based sum uncertainty bounds for N observables";
  m.attr("__version__") = kVersion;

  // Held for the lifetime of the interpreter.
  static PyObject* error_type =
      py::exception<Error>(m, "VarboundError", PyExc_ValueError).release().ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::handle(error_type)(e.what());
      exc.attr("kind") = std::string(error_kind_name(e.kind()));
      exc.attr("value") = e.value();
      PyErr_SetObject(error_type, exc.ptr());
    }
  });

  bind_linalg(m);
  bind_variance(m);
  bind_bounds(m);
  bind_optimizer(m);
  bind_catalog(m);
  bind_runner(m);
}
