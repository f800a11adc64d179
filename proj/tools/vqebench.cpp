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

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "vqebench/adapt.hpp"
#include "vqebench/errors.hpp"
#include "vqebench/fci.hpp"
#include "vqebench/scan.hpp"
#include "vqebench/selftest.hpp"

namespace {

using namespace vqebench;

int run_scan_command(const std::string& config_path) {
  const ScanConfig cfg = read_scan_config(config_path);
  const ScanResult result = run_scan(cfg);
  emit_report(result.rows, cfg.output, result.degenerate_labels);
  std::printf("%zu rows written to %s\n", result.rows.size(), cfg.output.string().c_str());
  return 0;
}

void print_trace(const RunResult& r) {
  std::printf("iteration,selected,grad_norm,energy,measurements,optimizer_converged\n");
  for (std::size_t i = 0; i < r.trace.size(); ++i) {
    const auto& rec = r.trace[i];
    const std::string selected = rec.selected_pool_id ? std::to_string(*rec.selected_pool_id) : "-";
    std::printf("%zu,%s,%.6e,%.9f,%zu,%s\n", i, selected.c_str(), rec.grad_norm, rec.energy,
                rec.measurement_count_cumulative, rec.optimizer_converged ? "true" : "false");
  }
}

int run_single_command(const std::string& fcidump, const std::string& method_name,
                       const std::string& optimizer_name, const AdaptConfig& cfg) {
  const Method method = parse_method(method_name);
  const OptimizerKind optimizer = parse_optimizer(optimizer_name);
  cfg.validate();
  const auto ham = read_fcidump(fcidump, fcidump);
  const FciSolution fci = solve_fci(ham);
  const VqeProblem problem(ham);
  const ScanRow row = evaluate_method(problem, fci, fcidump, method, optimizer, cfg);
  std::fputs(format_scan_csv({row}).c_str(), stdout);
  if (method != Method::Fci) {
    AdaptConfig run_cfg = cfg;
    run_cfg.optimizer = optimizer;
    const RunResult r = method == Method::Vqe ? run_vqe(problem, run_cfg) : run_adapt(problem, run_cfg);
    std::printf("\n");
    print_trace(r);
    std::printf("\nansatz:");
    for (const auto& e : r.ansatz.elements) std::printf(" %zu(%.9f)", e.pool_id, e.theta);
    std::printf("\n");
    for (const auto& op : problem.pool()->operators())
      std::printf("pool %zu: %s\n", op.id, op.description.c_str());
  }
  if (fci.degeneracy_flag) std::printf("note: degenerate FCI ground space\n");
  return 0;
}

int run_selftest_command() {
  bool ok = true;
  for (const auto& c : run_selftest()) {
    std::printf("%s %s%s%s\n", c.passed ? "PASS" : "FAIL", c.name.c_str(),
                c.detail.empty() ? "" : ": ", c.detail.c_str());
    ok = ok && c.passed;
  }
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"VQE and ADAPT-VQE statevector benchmarks on FCIDUMP Hamiltonians"};
  app.require_subcommand(1);

  std::string config_path;
  auto* scan = app.add_subcommand("scan", "Run a potential energy scan described by a config file");
  scan->add_option("--config", config_path, "Scan config file")->required();

  std::string fcidump, method = "adapt", optimizer = "lbfgs";
  AdaptConfig cfg;
  auto* run = app.add_subcommand("run", "Run one method on one FCIDUMP file");
  run->add_option("--fcidump", fcidump, "FCIDUMP file")->required();
  run->add_option("--method", method, "fci, vqe or adapt")->capture_default_str();
  run->add_option("--optimizer", optimizer, "nm or lbfgs")->capture_default_str();
  run->add_option("--grad-norm-threshold", cfg.grad_norm_threshold)->capture_default_str();
  run->add_option("--tol", cfg.tol_rel_energy, "Relative energy tolerance")->capture_default_str();
  run->add_option("--fd-step", cfg.fd_step, "Finite-difference step (rad)")->capture_default_str();
  run->add_option("--max-iter", cfg.max_iterations, "ADAPT iteration cap")->capture_default_str();

  auto* selftest = app.add_subcommand("selftest", "Run the built-in invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (scan->parsed()) return run_scan_command(config_path);
    if (run->parsed()) return run_single_command(fcidump, method, optimizer, cfg);
    if (selftest->parsed()) return run_selftest_command();
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
