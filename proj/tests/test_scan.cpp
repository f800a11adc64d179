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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "vqebench/errors.hpp"
#include "vqebench/scan.hpp"

namespace {

using namespace vqebench;
namespace fs = std::filesystem;

const fs::path kData = VQEBENCH_DATA_DIR;

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("vqebench_test_" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ScanConfig h2_config(std::initializer_list<const char*> labels) {
  ScanConfig cfg;
  for (const char* l : labels)
    cfg.inputs.push_back({l, kData / "h2" / ("h2_" + std::string(l) + ".fcidump")});
  return cfg;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(VQEBENCH_CLI) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(ScanConfig, ParsesKeysCommentsAndRelativePaths) {
  const auto cfg = parse_scan_config(
      "# scan\n"
      "input = 0.70 h2/h2_0.70.fcidump\n"
      "input = 0.80 /abs/h2_0.80.fcidump  # trailing\n"
      "output = out/h2\n"
      "methods = fci, adapt\n"
      "optimizers = lbfgs\n"
      "grad_norm_threshold = 5e-3\n"
      "max_iterations = 7\n"
      "warm_start = true\n",
      "/base");
  ASSERT_EQ(cfg.inputs.size(), 2u);
  EXPECT_EQ(cfg.inputs[0].label, "0.70");
  EXPECT_EQ(cfg.inputs[0].path, fs::path("/base/h2/h2_0.70.fcidump"));
  EXPECT_EQ(cfg.inputs[1].path, fs::path("/abs/h2_0.80.fcidump"));
  EXPECT_EQ(cfg.output, fs::path("/base/out/h2"));
  EXPECT_EQ(cfg.methods, (std::vector<Method>{Method::Fci, Method::Adapt}));
  EXPECT_EQ(cfg.optimizers, std::vector<OptimizerKind>{OptimizerKind::Lbfgs});
  EXPECT_EQ(cfg.adapt.grad_norm_threshold, 5e-3);
  EXPECT_EQ(cfg.adapt.max_iterations, 7u);
  EXPECT_TRUE(cfg.adapt.warm_start);
}

TEST(ScanConfig, RejectsMalformedInput) {
  EXPECT_THROW(parse_scan_config(""), InputError);
  EXPECT_THROW(parse_scan_config("input = a x.fcidump\nbogus = 1\n"), ParseError);
  EXPECT_THROW(parse_scan_config("input = a\n"), ParseError);
  EXPECT_THROW(parse_scan_config("input = a x\ninput = a y\n"), InputError);
  EXPECT_THROW(parse_scan_config("input = a,b x\n"), InputError);
  EXPECT_THROW(parse_scan_config("input = a x\nmethods = dmrg\n"), InputError);
  EXPECT_THROW(parse_scan_config("input = a x\ngrad_norm_threshold = -1\n"), InputError);
  try {
    parse_scan_config("input = a x\n\nnot a pair\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(read_scan_config("/nonexistent/scan.cfg"), IoError);
}

TEST(RunScan, FciOnlyGivesOneExactRow) {
  auto cfg = h2_config({"1.00"});
  cfg.methods = {Method::Fci};
  const auto result = run_scan(cfg);
  ASSERT_EQ(result.rows.size(), 1u);
  const auto& r = result.rows.front();
  EXPECT_EQ(r.method, "fci");
  EXPECT_EQ(r.optimizer, "none");
  EXPECT_EQ(r.abs_error_vs_fci, 0.0);
  EXPECT_NEAR(r.infidelity, 0.0, 1e-12);
  EXPECT_TRUE(r.converged);
  std::size_t lines = 0;
  for (char c : format_scan_csv(result.rows)) lines += c == '\n';
  EXPECT_EQ(lines, 2u);
}

TEST(RunScan, RowLayoutAndOptimizerAgreementOnHydrogen) {
  const auto result = run_scan(h2_config({"0.70", "1.50", "2.50"}));
  ASSERT_EQ(result.rows.size(), 3u * 5u);
  for (std::size_t i = 0; i < result.rows.size(); i += 5) {
    EXPECT_EQ(result.rows[i].method, "fci");
    for (std::size_t k = 1; k < 5; ++k) EXPECT_EQ(result.rows[i + k].label, result.rows[i].label);
    EXPECT_NEAR(result.rows[i + 1].energy, result.rows[i + 2].energy, 1e-6);
    EXPECT_NEAR(result.rows[i + 3].energy, result.rows[i + 4].energy, 1e-6);
    EXPECT_EQ(result.rows[i + 1].n_operators, 2u);
  }
  for (const auto& r : result.rows) EXPECT_LE(r.abs_error_vs_fci, 1e-6) << r.label << " " << r.method;
}

TEST(RunScan, FailsFastOnUnreadableInput) {
  auto cfg = h2_config({"1.00"});
  cfg.inputs.push_back({"missing", kData / "h2" / "absent.fcidump"});
  cfg.output = scratch("failfast");
  EXPECT_THROW(run_scan(cfg), IoError);
  EXPECT_FALSE(fs::exists(cfg.output));
}

TEST(ScanCsv, RoundTripsPrintedValues) {
  const auto rows = run_scan(h2_config({"0.90"})).rows;
  const std::string csv = format_scan_csv(rows);
  const auto back = parse_scan_csv(csv);
  ASSERT_EQ(back.size(), rows.size());
  EXPECT_EQ(format_scan_csv(back), csv);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_NEAR(back[i].energy, rows[i].energy, 5e-10);
    EXPECT_EQ(back[i].measurement_total, rows[i].measurement_total);
    EXPECT_EQ(back[i].converged, rows[i].converged);
  }
  EXPECT_THROW(parse_scan_csv("label,energy\n"), ParseError);
  EXPECT_THROW(parse_scan_csv(std::string(kScanCsvHeader) + "\na,b\n"), ParseError);
}

TEST(ScanJson, MatchesCsvRows) {
  const auto rows = run_scan(h2_config({"0.90"})).rows;
  const auto j = nlohmann::json::parse(format_scan_json(rows));
  const auto back = parse_scan_csv(format_scan_csv(rows));
  ASSERT_EQ(j.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(j[i]["label"], rows[i].label);
    EXPECT_EQ(j[i]["energy"].get<double>(), back[i].energy);
    EXPECT_EQ(j[i]["infidelity"].get<double>(), back[i].infidelity);
    EXPECT_EQ(j[i]["gate_count"].get<std::size_t>(), rows[i].gate_count);
  }
}

TEST(EmitReport, WritesAllArtifactsDeterministically) {
  const auto cfg = h2_config({"0.80", "2.00"});
  const fs::path a = scratch("emit_a"), b = scratch("emit_b");
  emit_report(run_scan(cfg).rows, a);
  emit_report(run_scan(cfg).rows, b);
  for (const char* name : {"scan.csv", "scan.json", "summary.txt", "scan.dat"}) {
    ASSERT_TRUE(fs::exists(a / name)) << name;
    EXPECT_EQ(slurp(a / name), slurp(b / name)) << name;
  }
  for (const auto& e : fs::directory_iterator(a)) EXPECT_NE(e.path().extension(), ".tmp");
  EXPECT_NE(slurp(a / "summary.txt").find("[medians]"), std::string::npos);
}

TEST(EmitReport, Errors) {
  const fs::path blocker = scratch("blocker");
  std::ofstream(blocker) << "x";
  ScanRow row;
  row.label = "x";
  EXPECT_THROW(emit_report({row}, blocker / "sub"), IoError);
  EXPECT_THROW(emit_report({}, scratch("empty")), ContractError);
}

TEST(Cli, ExitCodes) {
  const fs::path out = scratch("cli");
  fs::create_directories(out);
  {
    std::ofstream cfg(out / "ok.cfg");
    cfg << "input = 1.00 " << (kData / "h2" / "h2_1.00.fcidump").string() << "\noutput = res\n";
  }
  EXPECT_EQ(run_cli("scan --config " + (out / "ok.cfg").string()), 0);
  EXPECT_TRUE(fs::exists(out / "res" / "scan.csv"));
  {
    std::ofstream cfg(out / "bad.cfg");
    cfg << "input = 1.00 " << (out / "absent.fcidump").string() << "\n";
  }
  EXPECT_EQ(run_cli("scan --config " + (out / "bad.cfg").string()), 1);
  EXPECT_EQ(run_cli("scan --config " + (out / "nope.cfg").string()), 1);
  EXPECT_EQ(run_cli("frobnicate"), 1);
  EXPECT_EQ(run_cli("run --fcidump " + (kData / "h2" / "h2_1.00.fcidump").string() +
                    " --method adapt --optimizer nelder_mead"),
            0);
  EXPECT_EQ(run_cli("selftest"), 0);
}

}  // namespace
