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

// Measure spec files (JSON), report serialization, CSV exports and atomic
// file output.

#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>
#include <json.hpp>

#include "hankelrp/hankel.hpp"
#include "hankelrp/measure.hpp"
#include "hankelrp/pick.hpp"
#include "hankelrp/widom.hpp"

namespace hankelrp {

class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MeasureSpec {
  Domain domain = Domain::kHalfPlane;
  std::optional<HalfPlaneMeasure> half_plane;
  std::optional<DiscMeasure> disc;
};

/// Parses
///   {"domain": "halfplane" | "disc",
///    "atoms": [{"pos": x, "mass": m}],
///    "densities": [{"kind": "power", "coeff": c, "exponent": e,
///                   "base": "x" | "one_minus_x" | "one_plus_x" | "lambda",
///                   "support": [lo, hi | "inf"]}]}
/// Half-plane pieces use base "lambda"; disc pieces use the other three.
/// Throws SpecError on malformed input or an invalid measure.
MeasureSpec parse_measure_spec(std::string_view text);

std::string read_file(const std::filesystem::path& path);

/// Lower-case hex SHA-256.
std::string sha256_hex(std::string_view bytes);

nlohmann::json to_json(const WidomReport& r);
nlohmann::json to_json(const PositivityCertificate& c);
nlohmann::json to_json(const OSContractionReport& r);

/// One line per row, entries separated by commas. Purely real matrices are
/// written as reals, otherwise each entry is "re+imi".
std::string section_csv(const Eigen::MatrixXcd& m);

/// Header "p,re_h,im_h" then one line per sample.
std::string symbol_csv(const SymbolSamples& s);

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

/// Writes to a temporary file in the target directory, then renames it.
void write_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace hankelrp
