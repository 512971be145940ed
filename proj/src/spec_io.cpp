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

#include "hankelrp/spec_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include <unistd.h>

#include <openssl/evp.h>

namespace hankelrp {

using nlohmann::json;

namespace {

double number_field(const json& obj, const char* key) {
  if (!obj.contains(key) || !obj.at(key).is_number()) {
    throw SpecError(std::string("missing or non-numeric field \"") + key + "\"");
  }
  return obj.at(key).get<double>();
}

double bound_value(const json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string() && v.get<std::string>() == "inf") return kInf;
  throw SpecError("support bounds must be numbers or \"inf\"");
}

}  // namespace

MeasureSpec parse_measure_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SpecError("spec must be a JSON object");
  if (!doc.contains("domain") || !doc.at("domain").is_string()) throw SpecError("missing \"domain\"");
  const std::string domain = doc.at("domain").get<std::string>();
  MeasureSpec spec;
  if (domain == "halfplane") {
    spec.domain = Domain::kHalfPlane;
  } else if (domain == "disc") {
    spec.domain = Domain::kDisc;
  } else {
    throw SpecError("domain must be \"halfplane\" or \"disc\"");
  }

  std::vector<Atom> atoms;
  if (doc.contains("atoms")) {
    if (!doc.at("atoms").is_array()) throw SpecError("\"atoms\" must be an array");
    for (const auto& a : doc.at("atoms")) {
      if (!a.is_object()) throw SpecError("each atom must be an object");
      atoms.push_back({number_field(a, "pos"), number_field(a, "mass")});
    }
  }

  std::vector<PowerDensity> hp_pieces;
  std::vector<JacobiDensity> disc_pieces;
  if (doc.contains("densities")) {
    if (!doc.at("densities").is_array()) throw SpecError("\"densities\" must be an array");
    for (const auto& d : doc.at("densities")) {
      if (!d.is_object()) throw SpecError("each density must be an object");
      if (!d.contains("kind") || d.at("kind") != "power") throw SpecError("density kind must be \"power\"");
      const double coeff = number_field(d, "coeff");
      const double exponent = number_field(d, "exponent");
      if (!d.contains("base") || !d.at("base").is_string()) throw SpecError("density needs a \"base\"");
      const std::string base = d.at("base").get<std::string>();
      if (!d.contains("support") || !d.at("support").is_array() || d.at("support").size() != 2) {
        throw SpecError("density support must be a two-element array");
      }
      const double lo = bound_value(d.at("support")[0]);
      const double hi = bound_value(d.at("support")[1]);
      if (spec.domain == Domain::kHalfPlane) {
        if (base != "lambda") throw SpecError("half-plane densities use base \"lambda\"");
        hp_pieces.push_back({coeff, exponent, lo, hi});
      } else {
        JacobiDensity p{coeff, 0.0, 0.0, 0.0, lo, hi};
        if (base == "x") {
          p.s = exponent;
        } else if (base == "one_minus_x") {
          p.a = exponent;
        } else if (base == "one_plus_x") {
          p.b = exponent;
        } else {
          throw SpecError("disc densities use base \"x\", \"one_minus_x\" or \"one_plus_x\"");
        }
        disc_pieces.push_back(p);
      }
    }
  }

  try {
    if (spec.domain == Domain::kHalfPlane) {
      spec.half_plane = HalfPlaneMeasure(std::move(atoms), std::move(hp_pieces));
    } else {
      spec.disc = DiscMeasure(std::move(atoms), std::move(disc_pieces));
    }
  } catch (const InvalidMeasure& e) {
    throw SpecError(std::string("invalid measure: ") + e.what());
  }
  return spec;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpecError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 0xF]);
  }
  return out;
}

namespace {

json level_json(const GridLevel& g, const WidomLevelValues& v) {
  return {{"probes", g.probes}, {"decades", g.decades}, {"beta", v.beta}, {"gamma", v.gamma},
          {"moment_sup", v.moment_sup}};
}

}  // namespace

json to_json(const WidomReport& r) {
  return {{"domain", to_string(r.domain)},
          {"beta", r.beta},
          {"gamma", r.gamma},
          {"alpha_estimate", r.alpha_estimate},
          {"rho_total", r.rho_total},
          {"moment_sup", r.moment_sup},
          {"verdict", to_string(r.verdict)},
          {"grid",
           {{"coarse", level_json(r.grid.coarse, r.coarse)},
            {"fine", level_json(r.grid.fine, r.fine)},
            {"alpha_probes", r.grid.alpha_probes},
            {"alpha_max_exponent", r.grid.alpha_max_exponent}}}};
}

json to_json(const PositivityCertificate& c) {
  return {{"N", c.order},
          {"min_eigenvalue", c.min_eigenvalue},
          {"trace", c.trace},
          {"tolerance", c.tolerance},
          {"verdict", c.positive ? "positive" : "indefinite"}};
}

json to_json(const OSContractionReport& r) {
  json j{{"mode", r.mode == ContractionMode::kDiscShift ? "disc_shift" : "hp_gram"},
         {"min_eigenvalue", r.min_eigenvalue},
         {"tolerance", r.tolerance},
         {"verdict", r.contraction ? "contraction" : "not_contraction"}};
  if (r.mode == ContractionMode::kDiscShift) {
    j["N"] = r.order;
  } else {
    j["t_grid"] = r.t_grid;
    j["s"] = r.shift;
  }
  return j;
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string section_csv(const Eigen::MatrixXcd& m) {
  const bool real = m.size() == 0 || m.imag().cwiseAbs().maxCoeff() == 0.0;
  std::string out;
  for (long j = 0; j < m.rows(); ++j) {
    for (long k = 0; k < m.cols(); ++k) {
      if (k) out += ',';
      const cplx v = m(j, k);
      if (real) {
        out += format_double(v.real());
      } else {
        out += format_double(v.real());
        if (!(v.imag() < 0.0)) out += '+';
        out += format_double(v.imag());
        out += 'i';
      }
    }
    out += '\n';
  }
  return out;
}

std::string symbol_csv(const SymbolSamples& s) {
  std::string out = "p,re_h,im_h\n";
  for (std::size_t i = 0; i < s.grid.size(); ++i) {
    out += format_double(s.grid[i]) + ',' + format_double(s.values[i].real()) + ',' +
           format_double(s.values[i].imag()) + '\n';
  }
  return out;
}

void write_atomic(const std::filesystem::path& path, std::string_view contents) {
  namespace fs = std::filesystem;
  const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
  const fs::path tmp = dir / ("." + path.filename().string() + ".tmp." + std::to_string(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw std::runtime_error("write failed for " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw std::runtime_error("cannot move report into place at " + path.string());
  }
}

}  // namespace hankelrp
