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

// Batch driver behind the command-line tool.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace hankelrp {

inline constexpr int kExitOk = 0;
inline constexpr int kExitSuiteFailure = 1;
inline constexpr int kExitSpec = 2;
inline constexpr int kExitUnbounded = 3;
inline constexpr int kExitQuadrature = 4;

inline constexpr const char* kSchemaVersion = "hankelrp.report/1";

enum class Command { kReport, kWidom, kSymbol, kKernelCheck, kPositivity, kTransport, kVerifyAll };

std::optional<Command> parse_command(std::string_view name);
const char* to_string(Command c);

struct ReportConfig {
  std::filesystem::path spec_path;
  Command command = Command::kReport;
  int order = 64;
  std::filesystem::path out;
  /// Overrides the positivity / contraction tolerance.
  std::optional<double> tol;
  /// Number of log-spaced symbol sample points on (0, inf).
  int grid_points = 1024;
  /// Offset c in delta = c + h.
  double offset = 1.0;
  /// Optional CSV export: the section for positivity, the samples for symbol.
  std::optional<std::filesystem::path> csv;
};

struct RunOutcome {
  int exit_code = kExitOk;
  std::string message;
  nlohmann::json document;
  std::string csv;
};

/// Runs a command on the spec text without touching the file system.
RunOutcome execute(const ReportConfig& cfg, std::string_view spec_text);

/// Reads the spec, runs the command, writes the report (and CSV) atomically.
/// Returns the process exit code.
int run_report(const ReportConfig& cfg);

/// run_report with the verify-all command.
int run_verify(ReportConfig cfg);

}  // namespace hankelrp
