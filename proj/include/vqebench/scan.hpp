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

#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "vqebench/adapt.hpp"
#include "vqebench/fci.hpp"
#include "vqebench/hamiltonian.hpp"

namespace vqebench {

enum class Method { Fci, Vqe, Adapt };

std::string to_string(Method m);
Method parse_method(const std::string& name);

struct ScanInput {
  std::string label;
  std::filesystem::path path;
};

struct ScanConfig {
  std::vector<ScanInput> inputs;
  std::vector<Method> methods{Method::Fci, Method::Vqe, Method::Adapt};
  std::vector<OptimizerKind> optimizers{OptimizerKind::NelderMead, OptimizerKind::Lbfgs};
  AdaptConfig adapt;
  std::filesystem::path output = "scan_out";

  void validate() const;
};

/// Key-value config, one `key = value` per line, `#` comments. Inputs are
/// `input = <label> <path>` lines kept in file order. Relative paths resolve
/// against `base_dir`.
ScanConfig parse_scan_config(const std::string& text,
                             const std::filesystem::path& base_dir = {});
ScanConfig read_scan_config(const std::filesystem::path& path);

struct ScanRow {
  std::string label;
  std::string method;
  std::string optimizer;
  double energy = 0.0;
  double abs_error_vs_fci = 0.0;
  double infidelity = 0.0;
  std::size_t n_operators = 0;
  std::size_t gate_count = 0;
  std::size_t depth = 0;
  std::size_t measurement_total = 0;
  bool converged = false;

  friend bool operator==(const ScanRow&, const ScanRow&) = default;
};

/// Runs one method on one Hamiltonian and scores it against `fci`.
ScanRow evaluate_method(const VqeProblem& problem, const FciSolution& fci,
                        const std::string& label, Method method, OptimizerKind optimizer,
                        const AdaptConfig& cfg);

struct ScanResult {
  std::vector<ScanRow> rows;
  /// Labels whose FCI ground space is degenerate; their infidelities are
  /// minima over that space.
  std::vector<std::string> degenerate_labels;
};

/// Parses every input before any computation. Rows come in input order, then
/// method order, then optimizer order; fci contributes one row per input.
ScanResult run_scan(const ScanConfig& cfg);

inline constexpr const char* kScanCsvHeader =
    "label,method,optimizer,energy,abs_error_vs_fci,infidelity,n_operators,gate_count,depth,"
    "measurement_total,converged";

/// Rows as printed: energy with 9 decimals, errors and infidelities with 6
/// significant digits after the point in scientific form.
std::string format_scan_csv(const std::vector<ScanRow>& rows);
std::string format_scan_json(const std::vector<ScanRow>& rows);
std::string format_scan_summary(const std::vector<ScanRow>& rows,
                                const std::vector<std::string>& degenerate_labels = {});
/// gnuplot layout: one indexed block per (method, optimizer).
std::string format_scan_dat(const std::vector<ScanRow>& rows);

std::vector<ScanRow> parse_scan_csv(const std::string& text);

/// Writes scan.csv, scan.json, summary.txt and scan.dat into `out`. All files
/// go to temporaries first and are renamed only after every write succeeded.
void emit_report(const std::vector<ScanRow>& rows, const std::filesystem::path& out,
                 const std::vector<std::string>& degenerate_labels = {});

}  // namespace vqebench
