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

#include "vqebench/scan.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "vqebench/errors.hpp"

namespace vqebench {
namespace {

std::string printf_string(const char* fmt, ...) {
  va_list args;
  va_start(args, fmt);
  va_list copy;
  va_copy(copy, args);
  const int len = std::vsnprintf(nullptr, 0, fmt, copy);
  va_end(copy);
  std::string out(static_cast<std::size_t>(len), '\0');
  std::vsnprintf(out.data(), out.size() + 1, fmt, args);
  va_end(args);
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::vector<std::string> split_list(const std::string& value) {
  std::string spaced = value;
  std::replace(spaced.begin(), spaced.end(), ',', ' ');
  std::istringstream in(spaced);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

double parse_real(const std::string& s, std::size_t line) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || *end != '\0' || !std::isfinite(v)) throw ParseError("not a number: '" + s + "'", line);
  return v;
}

std::size_t parse_count(const std::string& s, std::size_t line) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw ParseError("not a non-negative integer: '" + s + "'", line);
  return static_cast<std::size_t>(std::stoull(s));
}

bool parse_bool(const std::string& s, std::size_t line) {
  const std::string v = lower(s);
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ParseError("not a boolean: '" + s + "'", line);
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
  std::filesystem::path path(p);
  return path.is_relative() && !base.empty() ? base / path : path;
}

std::string format_energy(double e) { return printf_string("%.9f", e); }
std::string format_small(double e) { return printf_string("%.6e", e); }

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

// Splits on commas; labels are the only free text and may not contain commas.
std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace

std::string to_string(Method m) {
  switch (m) {
    case Method::Fci: return "fci";
    case Method::Vqe: return "vqe";
    case Method::Adapt: return "adapt";
  }
  return "unknown";
}

Method parse_method(const std::string& name) {
  const std::string n = lower(name);
  if (n == "fci") return Method::Fci;
  if (n == "vqe") return Method::Vqe;
  if (n == "adapt" || n == "adapt_vqe" || n == "adapt-vqe") return Method::Adapt;
  throw InputError("unknown method '" + name + "' (expected fci, vqe or adapt)");
}

void ScanConfig::validate() const {
  if (inputs.empty()) throw InputError("scan config has no inputs");
  if (methods.empty()) throw InputError("scan config has no methods");
  const bool needs_optimizer = std::any_of(methods.begin(), methods.end(),
                                           [](Method m) { return m != Method::Fci; });
  if (needs_optimizer && optimizers.empty()) throw InputError("scan config has no optimizers");
  std::set<std::string> labels;
  for (const auto& in : inputs) {
    if (in.label.empty()) throw InputError("empty input label");
    if (in.label.find(',') != std::string::npos) throw InputError("label contains a comma: " + in.label);
    if (!labels.insert(in.label).second) throw InputError("duplicate input label: " + in.label);
  }
  adapt.validate();
}

ScanConfig parse_scan_config(const std::string& text, const std::filesystem::path& base_dir) {
  ScanConfig cfg;
  std::istringstream in(text);
  std::size_t lineno = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'key = value'", lineno);
    const std::string key = lower(trim(line.substr(0, eq)));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "input") {
      std::istringstream parts(value);
      std::string label, path, extra;
      if (!(parts >> label >> path) || (parts >> extra))
        throw ParseError("expected 'input = <label> <path>'", lineno);
      cfg.inputs.push_back({label, resolve(base_dir, path)});
    } else if (key == "output") {
      if (value.empty()) throw ParseError("empty output directory", lineno);
      cfg.output = resolve(base_dir, value);
    } else if (key == "methods") {
      cfg.methods.clear();
      for (const auto& m : split_list(value)) cfg.methods.push_back(parse_method(m));
    } else if (key == "optimizers") {
      cfg.optimizers.clear();
      for (const auto& o : split_list(value)) cfg.optimizers.push_back(parse_optimizer(o));
    } else if (key == "grad_norm_threshold") {
      cfg.adapt.grad_norm_threshold = parse_real(value, lineno);
    } else if (key == "max_iterations") {
      cfg.adapt.max_iterations = parse_count(value, lineno);
    } else if (key == "tol_rel_energy") {
      cfg.adapt.tol_rel_energy = parse_real(value, lineno);
    } else if (key == "fd_step") {
      cfg.adapt.fd_step = parse_real(value, lineno);
    } else if (key == "max_evaluations") {
      cfg.adapt.max_evaluations = parse_count(value, lineno);
    } else if (key == "warm_start") {
      cfg.adapt.warm_start = parse_bool(value, lineno);
    } else {
      throw ParseError("unknown key '" + key + "'", lineno);
    }
  }
  cfg.validate();
  return cfg;
}

ScanConfig read_scan_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_scan_config(buf.str(), path.parent_path());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), e.line());
  }
}

ScanRow evaluate_method(const VqeProblem& problem, const FciSolution& fci,
                        const std::string& label, Method method, OptimizerKind optimizer,
                        const AdaptConfig& cfg) {
  ScanRow row;
  row.label = label;
  row.method = to_string(method);
  if (method == Method::Fci) {
    row.optimizer = "none";
    row.energy = fci.energy;
    row.infidelity = infidelity_vs_fci(fci.ground_state, fci).infidelity;
    row.converged = true;
  } else {
    AdaptConfig run_cfg = cfg;
    run_cfg.optimizer = optimizer;
    const RunResult r = method == Method::Vqe ? run_vqe(problem, run_cfg) : run_adapt(problem, run_cfg);
    row.optimizer = to_string(optimizer);
    row.energy = r.energy;
    row.infidelity = infidelity_vs_fci(r.state, fci).infidelity;
    row.n_operators = r.ansatz.size();
    row.gate_count = r.resources.gate_count;
    row.depth = r.resources.depth;
    row.measurement_total = r.ledger.pauli_term_measurements;
    row.converged = r.converged;
  }
  row.abs_error_vs_fci = std::abs(row.energy - fci.energy);
  return row;
}

ScanResult run_scan(const ScanConfig& cfg) {
  cfg.validate();
  std::vector<MolecularHamiltonian> hams;
  hams.reserve(cfg.inputs.size());
  for (const auto& in : cfg.inputs) hams.push_back(read_fcidump(in.path, in.label));

  ScanResult result;
  for (std::size_t i = 0; i < hams.size(); ++i) {
    const std::string& label = cfg.inputs[i].label;
    const FciSolution fci = solve_fci(hams[i]);
    if (fci.degeneracy_flag) result.degenerate_labels.push_back(label);
    const VqeProblem problem(hams[i]);
    for (Method m : cfg.methods) {
      if (m == Method::Fci) {
        result.rows.push_back(evaluate_method(problem, fci, label, m, OptimizerKind::Lbfgs, cfg.adapt));
        continue;
      }
      for (OptimizerKind o : cfg.optimizers)
        result.rows.push_back(evaluate_method(problem, fci, label, m, o, cfg.adapt));
    }
  }
  return result;
}

std::string format_scan_csv(const std::vector<ScanRow>& rows) {
  std::string out = std::string(kScanCsvHeader) + "\n";
  for (const auto& r : rows) {
    out += r.label + "," + r.method + "," + r.optimizer + "," + format_energy(r.energy) + "," +
           format_small(r.abs_error_vs_fci) + "," + format_small(r.infidelity) + "," +
           std::to_string(r.n_operators) + "," + std::to_string(r.gate_count) + "," +
           std::to_string(r.depth) + "," + std::to_string(r.measurement_total) + "," +
           (r.converged ? "true" : "false") + "\n";
  }
  return out;
}

std::string format_scan_json(const std::vector<ScanRow>& rows) {
  // Numbers go through the CSV formatting so both files carry the same values.
  auto as_printed = [](const std::string& s) { return std::strtod(s.c_str(), nullptr); };
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json o;
    o["label"] = r.label;
    o["method"] = r.method;
    o["optimizer"] = r.optimizer;
    o["energy"] = as_printed(format_energy(r.energy));
    o["abs_error_vs_fci"] = as_printed(format_small(r.abs_error_vs_fci));
    o["infidelity"] = as_printed(format_small(r.infidelity));
    o["n_operators"] = r.n_operators;
    o["gate_count"] = r.gate_count;
    o["depth"] = r.depth;
    o["measurement_total"] = r.measurement_total;
    o["converged"] = r.converged;
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + "\n";
}

std::vector<ScanRow> parse_scan_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || trim(line) != kScanCsvHeader)
    throw ParseError("unexpected scan.csv header", 1);
  std::vector<ScanRow> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 11) throw ParseError("expected 11 fields", lineno);
    ScanRow r;
    r.label = f[0];
    r.method = f[1];
    r.optimizer = f[2];
    r.energy = parse_real(f[3], lineno);
    r.abs_error_vs_fci = parse_real(f[4], lineno);
    r.infidelity = parse_real(f[5], lineno);
    r.n_operators = parse_count(f[6], lineno);
    r.gate_count = parse_count(f[7], lineno);
    r.depth = parse_count(f[8], lineno);
    r.measurement_total = parse_count(f[9], lineno);
    if (f[10] != "true" && f[10] != "false") throw ParseError("converged must be true/false", lineno);
    r.converged = f[10] == "true";
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string format_scan_summary(const std::vector<ScanRow>& rows,
                                const std::vector<std::string>& degenerate_labels) {
  std::string out;
  out += "# vqebench scan summary\n";
  out += "# gradient-free optimizer: nelder_mead (Nelder-Mead in place of COBYLA)\n";
  out += "# gradient-based optimizer: lbfgs with central finite differences\n";
  out += "# ADAPT gradient norm: L2 over the full pool gradient vector\n";
  out += "# measurement unit: one non-identity Pauli term per expectation evaluation\n";
  out += "# degenerate FCI ground space: infidelity is the minimum over that space\n";
  if (!degenerate_labels.empty()) {
    out += "# degenerate labels:";
    for (const auto& l : degenerate_labels) out += " " + l;
    out += "\n";
  }

  // Group keys keep first-appearance order.
  std::vector<std::pair<std::string, std::string>> groups;
  std::vector<std::string> labels;
  for (const auto& r : rows) {
    const auto key = std::make_pair(r.method, r.optimizer);
    if (std::find(groups.begin(), groups.end(), key) == groups.end()) groups.push_back(key);
    if (std::find(labels.begin(), labels.end(), r.label) == labels.end()) labels.push_back(r.label);
  }

  out += "\n[medians]\nmethod,optimizer,rows,median_abs_error_vs_fci,median_infidelity,"
         "median_n_operators,median_measurement_total\n";
  for (const auto& [method, optimizer] : groups) {
    std::vector<double> err, inf, nops, meas;
    for (const auto& r : rows) {
      if (r.method != method || r.optimizer != optimizer) continue;
      err.push_back(r.abs_error_vs_fci);
      inf.push_back(r.infidelity);
      nops.push_back(static_cast<double>(r.n_operators));
      meas.push_back(static_cast<double>(r.measurement_total));
    }
    out += printf_string("%s,%s,%zu,%.6e,%.6e,%g,%g\n", method.c_str(), optimizer.c_str(),
                         err.size(), median(err), median(inf), median(nops), median(meas));
  }

  auto find_row = [&](const std::string& label, const std::string& method,
                      const std::string& optimizer) -> const ScanRow* {
    for (const auto& r : rows)
      if (r.label == label && r.method == method && r.optimizer == optimizer) return &r;
    return nullptr;
  };

  out += "\n[optimizer_difference]\nlabel,method,E(nelder_mead)-E(lbfgs)\n";
  struct Tally {
    std::size_t points = 0, gradient_at_or_below = 0, lbfgs_cheaper = 0;
  };
  std::map<std::string, Tally> tallies;
  for (const auto& label : labels) {
    for (const std::string method : {"vqe", "adapt"}) {
      const ScanRow* nm = find_row(label, method, "nelder_mead");
      const ScanRow* lb = find_row(label, method, "lbfgs");
      if (!nm || !lb) continue;
      const double diff = nm->energy - lb->energy;
      out += printf_string("%s,%s,%.9f\n", label.c_str(), method.c_str(), diff);
      auto& t = tallies[method];
      ++t.points;
      if (diff >= -1e-9) ++t.gradient_at_or_below;
      if (lb->measurement_total < nm->measurement_total) ++t.lbfgs_cheaper;
    }
  }

  out += "\n[trends]\n";
  for (const std::string method : {"vqe", "adapt"}) {
    const auto it = tallies.find(method);
    if (it == tallies.end()) continue;
    const Tally& t = it->second;
    out += printf_string("%s: lbfgs energy at or below nelder_mead (1e-9 Ha slack) at %zu/%zu labels\n",
                         method.c_str(), t.gradient_at_or_below, t.points);
    out += printf_string("%s: lbfgs measurement total below nelder_mead at %zu/%zu labels\n",
                         method.c_str(), t.lbfgs_cheaper, t.points);
  }
  for (const std::string optimizer : {"nelder_mead", "lbfgs"}) {
    std::size_t points = 0, adapt_more = 0;
    for (const auto& label : labels) {
      const ScanRow* v = find_row(label, "vqe", optimizer);
      const ScanRow* a = find_row(label, "adapt", optimizer);
      if (!v || !a) continue;
      ++points;
      if (a->measurement_total > v->measurement_total) ++adapt_more;
    }
    if (points)
      out += printf_string("%s: adapt measurement total above vqe at %zu/%zu labels\n",
                           optimizer.c_str(), adapt_more, points);
  }
  return out;
}

std::string format_scan_dat(const std::vector<ScanRow>& rows) {
  std::vector<std::pair<std::string, std::string>> groups;
  for (const auto& r : rows) {
    const auto key = std::make_pair(r.method, r.optimizer);
    if (std::find(groups.begin(), groups.end(), key) == groups.end()) groups.push_back(key);
  }
  std::string out;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (g) out += "\n\n";
    out += "# " + groups[g].first + " " + groups[g].second + "\n";
    out += "# label energy abs_error_vs_fci infidelity n_operators gate_count depth measurement_total\n";
    for (const auto& r : rows) {
      if (r.method != groups[g].first || r.optimizer != groups[g].second) continue;
      out += r.label + " " + format_energy(r.energy) + " " + format_small(r.abs_error_vs_fci) + " " +
             format_small(r.infidelity) + " " + std::to_string(r.n_operators) + " " +
             std::to_string(r.gate_count) + " " + std::to_string(r.depth) + " " +
             std::to_string(r.measurement_total) + "\n";
    }
  }
  return out;
}

void emit_report(const std::vector<ScanRow>& rows, const std::filesystem::path& out,
                 const std::vector<std::string>& degenerate_labels) {
  if (rows.empty()) throw ContractError("emit_report: no rows");
  std::error_code ec;
  std::filesystem::create_directories(out, ec);
  if (ec || !std::filesystem::is_directory(out))
    throw IoError("cannot create output directory " + out.string());

  const std::vector<std::pair<std::string, std::string>> files{
      {"scan.csv", format_scan_csv(rows)},
      {"scan.json", format_scan_json(rows)},
      {"summary.txt", format_scan_summary(rows, degenerate_labels)},
      {"scan.dat", format_scan_dat(rows)},
  };
  std::vector<std::filesystem::path> temps;
  try {
    for (const auto& [name, text] : files) {
      temps.push_back(out / ("." + name + ".tmp"));
      write_file(temps.back(), text);
    }
  } catch (...) {
    for (const auto& t : temps) std::filesystem::remove(t, ec);
    throw;
  }
  for (std::size_t i = 0; i < files.size(); ++i) {
    std::filesystem::rename(temps[i], out / files[i].first, ec);
    if (ec) throw IoError("cannot rename into " + (out / files[i].first).string());
  }
}

}  // namespace vqebench
