// Copyright 2026 The vqebench Authors
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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "vqebench/adapt.hpp"
#include "vqebench/errors.hpp"
#include "vqebench/fci.hpp"
#include "vqebench/scan.hpp"
#include "vqebench/selftest.hpp"

namespace py = pybind11;
using namespace vqebench;

namespace {

AdaptConfig make_config(const std::string& optimizer, double grad_norm_threshold, double tol,
                        std::size_t max_iterations) {
  AdaptConfig cfg;
  cfg.optimizer = parse_optimizer(optimizer);
  cfg.grad_norm_threshold = grad_norm_threshold;
  cfg.tol_rel_energy = tol;
  cfg.max_iterations = max_iterations;
  cfg.validate();
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Statevector VQE and ADAPT-VQE on small active-space Hamiltonians";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ContractError>(m, "ContractError", PyExc_RuntimeError);
  py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);

  py::class_<MolecularHamiltonian>(m, "MolecularHamiltonian")
      .def_readonly("n_spatial", &MolecularHamiltonian::n_spatial)
      .def_readonly("n_electrons", &MolecularHamiltonian::n_electrons)
      .def_readonly("core_energy", &MolecularHamiltonian::core_energy)
      .def_readonly("label", &MolecularHamiltonian::label)
      .def("h1", [](const MolecularHamiltonian& h, std::size_t i, std::size_t j) { return h.h1(i, j); })
      .def("eri", &MolecularHamiltonian::eri)
      .def("to_fcidump", &write_fcidump);

  m.def("read_fcidump", [](const std::filesystem::path& p) { return read_fcidump(p); }, py::arg("path"));
  m.def("parse_fcidump", [](const std::string& text) { return parse_fcidump_text(text); }, py::arg("text"));

  py::class_<FciSolution>(m, "FciSolution")
      .def_readonly("energy", &FciSolution::energy)
      .def_readonly("degeneracy_flag", &FciSolution::degeneracy_flag)
      .def_readonly("sector_spectrum", &FciSolution::sector_spectrum);
  m.def("solve_fci", py::overload_cast<const MolecularHamiltonian&>(&solve_fci), py::arg("hamiltonian"));

  m.def(
      "pool_descriptions",
      [](std::size_t n_spatial, std::size_t n_electrons) {
        const auto pool = build_uccsd_pool(n_spatial, n_electrons);
        std::vector<std::string> out;
        for (const auto& op : pool.operators())
          out.push_back(op.description);
        return out;
      },
      py::arg("n_spatial"), py::arg("n_electrons"));

  py::class_<AdaptIteration>(m, "Iteration")
      .def_readonly("selected_pool_id", &AdaptIteration::selected_pool_id)
      .def_readonly("grad_norm", &AdaptIteration::grad_norm)
      .def_readonly("energy", &AdaptIteration::energy)
      .def_readonly("theta", &AdaptIteration::theta)
      .def_readonly("measurements", &AdaptIteration::measurement_count_cumulative);

  py::class_<RunResult>(m, "RunResult")
      .def_readonly("method", &RunResult::method)
      .def_readonly("energy", &RunResult::energy)
      .def_readonly("trace", &RunResult::trace)
      .def_readonly("converged", &RunResult::converged)
      .def_readonly("final_grad_norm", &RunResult::final_grad_norm)
      .def_property_readonly("n_operators", [](const RunResult& r) { return r.ansatz.size(); })
      .def_property_readonly("thetas", [](const RunResult& r) { return r.ansatz.thetas(); })
      .def_property_readonly("measurements", [](const RunResult& r) { return r.ledger.pauli_term_measurements; })
      .def_property_readonly("gate_count", [](const RunResult& r) { return r.resources.gate_count; })
      .def_property_readonly("depth", [](const RunResult& r) { return r.resources.depth; });

  m.def(
      "run_adapt",
      [](const MolecularHamiltonian& h, const std::string& optimizer, double threshold, double tol,
         std::size_t max_iterations) { return run_adapt(h, make_config(optimizer, threshold, tol, max_iterations)); },
      py::arg("hamiltonian"), py::arg("optimizer") = "lbfgs", py::arg("grad_norm_threshold") = 1e-2,
      py::arg("tol_rel_energy") = kDefaultTolRelEnergy, py::arg("max_iterations") = 50);
  m.def(
      "run_vqe",
      [](const MolecularHamiltonian& h, const std::string& optimizer, double tol) {
        return run_vqe(h, make_config(optimizer, 1e-2, tol, 50));
      },
      py::arg("hamiltonian"), py::arg("optimizer") = "lbfgs", py::arg("tol_rel_energy") = kDefaultTolRelEnergy);

  m.def(
      "run_scan_csv",
      [](const std::filesystem::path& config) {
        return format_scan_csv(run_scan(read_scan_config(config)).rows);
      },
      py::arg("config"), "Runs a scan config and returns the scan.csv text without writing files.");

  m.def("selftest", [] {
    std::vector<std::tuple<std::string, bool, std::string>> out;
    for (const auto& c : run_selftest()) out.emplace_back(c.name, c.passed, c.detail);
    return out;
  });
}
