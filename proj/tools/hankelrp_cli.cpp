/*
 * Copyright 2026 The hankelrp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hankelrp/grid_ops.hpp"
#include "hankelrp/report.hpp"

namespace {

void apply_thread_cap() {
  const char* env = std::getenv("HANKELRP_THREADS");
  if (env == nullptr || *env == '\0') return;
  try {
    const int n = std::stoi(env);
    if (n > 0) hankelrp::grid::set_max_threads(n);
  } catch (const std::exception&) {
    std::cerr << "ignoring HANKELRP_THREADS=" << env << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hankel forms, reflection positivity and Widom checks for measures on (0, inf)"};
  std::string command;
  std::string spec;
  std::string out;
  std::string csv;
  hankelrp::ReportConfig cfg;
  double tol = 0.0;

  app.add_option("command", command,
                 "report | widom | symbol | kernel-check | positivity | transport | verify-all")
      ->required();
  app.add_option("--spec", spec, "measure spec (JSON)")->required()->check(CLI::ExistingFile);
  app.add_option("--N", cfg.order, "section order")->required()->check(CLI::Range(1, 2047));
  app.add_option("--out", out, "report path (JSON)")->required();
  auto* tol_opt = app.add_option("--tol", tol, "positivity tolerance")->check(CLI::PositiveNumber);
  app.add_option("--grid", cfg.grid_points, "symbol sample points on (0, inf)")
      ->check(CLI::Range(16, 1 << 20));
  app.add_option("--c", cfg.offset, "offset c in delta = c + h")->check(CLI::PositiveNumber);
  app.add_option("--csv", csv, "CSV export of the section or symbol samples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : hankelrp::kExitSpec;
  }

  const auto parsed = hankelrp::parse_command(command);
  if (!parsed) {
    std::cerr << "unknown command: " << command << "\n";
    return hankelrp::kExitSpec;
  }
  cfg.command = *parsed;
  cfg.spec_path = spec;
  cfg.out = out;
  if (tol_opt->count() > 0) cfg.tol = tol;
  if (!csv.empty()) cfg.csv = csv;
  apply_thread_cap();

  try {
    const int code = hankelrp::run_report(cfg);
    if (code != hankelrp::kExitOk) std::cerr << command << " finished with exit code " << code << "\n";
    return code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return hankelrp::kExitSuiteFailure;
  }
}
