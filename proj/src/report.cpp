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

#include "hankelrp/report.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "hankelrp/checks.hpp"
#include "hankelrp/hankel.hpp"
#include "hankelrp/outer.hpp"
#include "hankelrp/pick.hpp"
#include "hankelrp/spec_io.hpp"
#include "hankelrp/transport.hpp"
#include "hankelrp/widom.hpp"

namespace hankelrp {

using nlohmann::json;

namespace {

struct CommandName {
  Command command;
  const char* name;
};

constexpr std::array<CommandName, 7> kCommands{{{Command::kReport, "report"},
                                                {Command::kWidom, "widom"},
                                                {Command::kSymbol, "symbol"},
                                                {Command::kKernelCheck, "kernel-check"},
                                                {Command::kPositivity, "positivity"},
                                                {Command::kTransport, "transport"},
                                                {Command::kVerifyAll, "verify-all"}}};

constexpr std::array<int, 4> kNormOrders{8, 16, 32, 64};
constexpr std::uint64_t kPairSeed = 0x5eed2026;
constexpr int kQuotientPairs = 50;
constexpr std::array<double, 3> kPolarPoints{0.5, 1.0, 2.0};
constexpr std::array<double, 4> kGramTimes{0.25, 0.5, 1.0, 2.0};
constexpr double kGramShift = 0.5;

// A failed precondition that maps to a specific exit code.
struct CommandFailure {
  int code;
  std::string message;
};

const HalfPlaneMeasure& need_half_plane(const MeasureSpec& spec, Command c) {
  if (!spec.half_plane) {
    throw CommandFailure{kExitSpec, std::string("command ") + to_string(c) +
                                        " needs a halfplane measure spec"};
  }
  return *spec.half_plane;
}

WidomReport widom_for(const MeasureSpec& spec) {
  return spec.half_plane ? widom_check(*spec.half_plane) : widom_check(*spec.disc);
}

DiscMeasure disc_side(const MeasureSpec& spec) {
  return spec.disc ? *spec.disc : cayley_pushforward(*spec.half_plane);
}

struct SectionData {
  MomentVector moments;
  HankelSection section;
  PositivityCertificate certificate;
  std::vector<double> norms;
  OSContractionReport contraction;
  SupportVerdict support;
};

SectionData compute_sections(const DiscMeasure& mu, int order, double tol) {
  const int needed = std::max(2 * order + 1, 2 * kNormOrders.back());
  SectionData d;
  d.moments = moments(mu, needed);
  d.section = section_from_moments(d.moments, order);
  d.certificate = positivity_certificate(d.section, tol);
  for (int n : kNormOrders) d.norms.push_back(norm_estimate(section_from_moments(d.moments, n)));
  d.contraction = contraction_check(d.moments, order, tol);
  d.support = support_sign_test(d.moments, order, tol);
  return d;
}

json sections_json(const SectionData& d, int order) {
  json norms = json::array();
  for (std::size_t i = 0; i < kNormOrders.size(); ++i) {
    norms.push_back({{"N", kNormOrders[i]}, {"norm", d.norms[i]}});
  }
  std::vector<double> shown(d.moments.values.begin(), d.moments.values.begin() + 2 * order);
  return {{"N", order},
          {"moments", shown},
          {"positivity", to_json(d.certificate)},
          {"norms", norms},
          {"contraction", to_json(d.contraction)},
          {"support_test", to_string(d.support)}};
}

json symbol_json(const SymbolSamples& s, const WidomReport& w) {
  json samples = json::array();
  for (std::size_t i = 0; i < s.grid.size(); ++i) {
    samples.push_back({s.grid[i], s.values[i].real(), s.values[i].imag()});
  }
  json bound = nullptr;
  if (w.verdict == Verdict::kBounded) bound = symbol_bound(w);
  return {{"points", s.grid.size()},
          {"sup_estimate", s.sup_estimate},
          {"symbol_bound", bound},
          {"sharp_symmetric", s.sharp_symmetric},
          {"sharp_defect", sharp_symmetry_defect(s)},
          {"samples", samples}};
}

json kernel_residuals(const HalfPlaneMeasure& mu) {
  const auto probes = default_probe_pairs();
  const auto pairs = right_half_plane_pairs(kQuotientPairs, kPairSeed);
  return {{"kernel_reconstruction", reconstruction_residual(mu, probes)},
          {"difference_quotient", difference_quotient_residual(mu, pairs)},
          {"superposition", superposition_residual(mu, probes)}};
}

json transport_residuals(const HalfPlaneMeasure& mu, double c) {
  const auto probes = default_probe_pairs();
  const TransportReport t = verify_rp_transport(mu, c, probes);
  const PolarReport p = polar_decomposition_check(mu, c, kPolarPoints);
  return {{"offset", c},
          {"rp_transport", t.max_residual},
          {"constant_invisibility", t.max_constant_integral},
          {"polar_modulus", p.modulus_residual},
          {"polar_unimodular", p.unimodular_residual},
          {"polar_sharp", p.sharp_defect}};
}

void require_bounded(const WidomReport& w, Command c) {
  if (w.verdict != Verdict::kBounded) {
    throw CommandFailure{kExitUnbounded, std::string("command ") + to_string(c) +
                                             " needs a bounded measure, widom verdict is " +
                                             to_string(w.verdict)};
  }
}

// ---------------------------------------------------------------------------
// verify-all

struct Suite {
  std::string name;
  std::string status;  // pass | fail | skipped | info
  double worst;
  double threshold;
  std::string note;
};

json suite_json(const Suite& s) {
  json j{{"name", s.name}, {"status", s.status}};
  j["worst"] = std::isfinite(s.worst) ? json(s.worst) : json(nullptr);
  j["threshold"] = std::isfinite(s.threshold) ? json(s.threshold) : json(nullptr);
  if (!s.note.empty()) j["note"] = s.note;
  return j;
}

Suite at_most(std::string name, double worst, double threshold) {
  return {std::move(name), worst <= threshold ? "pass" : "fail", worst, threshold, {}};
}

Suite skipped(std::string name, std::string why) {
  return {std::move(name), "skipped", NAN, NAN, std::move(why)};
}

std::vector<Suite> common_suites(const WidomReport& w, const SectionData& d) {
  std::vector<Suite> out;
  out.push_back({"widom_bounded", w.verdict == Verdict::kBounded ? "pass" : "fail", NAN, NAN,
                 to_string(w.verdict)});
  out.push_back({"positivity", d.certificate.positive ? "pass" : "fail", d.certificate.min_eigenvalue,
                 -d.certificate.tolerance * (1.0 + std::abs(d.certificate.trace)), {}});
  out.push_back(at_most("hankel_structure", d.section.hankel_defect(), 0.0));
  double drop = 0.0;
  for (std::size_t i = 1; i < d.norms.size(); ++i) {
    drop = std::max(drop, (d.norms[i - 1] - d.norms[i]) / std::max(d.norms[i - 1], 1e-300));
  }
  out.push_back(at_most("norm_monotone", drop, 1e-12));
  out.push_back({"support_test", "info", NAN, NAN, to_string(d.support)});
  return out;
}

std::vector<Suite> half_plane_suites(const HalfPlaneMeasure& mu, const WidomReport& w,
                                     const SymbolSamples& s, double c, double tol) {
  std::vector<Suite> out;
  const bool bounded = w.verdict == Verdict::kBounded;
  if (bounded) {
    out.push_back(at_most("symbol_bound", s.sup_estimate - symbol_bound(w), 0.0));
  } else {
    out.push_back(skipped("symbol_bound", "widom verdict is not bounded"));
  }
  out.push_back(at_most("sharp_symmetry", sharp_symmetry_defect(s), 1e-12));

  const auto probes = default_probe_pairs();
  if (bounded) {
    out.push_back(at_most("kernel_reconstruction", reconstruction_residual(mu, probes), 1e-6));
  } else {
    out.push_back(skipped("kernel_reconstruction", "widom verdict is not bounded"));
  }
  out.push_back(at_most("difference_quotient",
                        difference_quotient_residual(mu, right_half_plane_pairs(kQuotientPairs, kPairSeed)),
                        1e-8));
  out.push_back(at_most("superposition", superposition_residual(mu, probes), 1e-12));

  const auto ps = grid::log_space(1e-3, 1e3, 61);
  out.push_back(at_most("lower_bound", lower_bound_shortfall(mu, ps), 1e-12));
  out.push_back(at_most("kappa_envelope", kappa_envelope_excess(mu, w.alpha_estimate, ps), 1e-12));

  if (mu.finite_mass() && !mu.empty()) {
    out.push_back(at_most("psi_mass", psi_mass_residual(mu), 1e-6));
    out.push_back(at_most("psi_fourier", psi_fourier_residual(mu, 1.0), 1e-6));
  } else {
    out.push_back(skipped("psi_mass", "needs a nonzero measure of finite mass"));
    out.push_back(skipped("psi_fourier", "needs a nonzero measure of finite mass"));
  }

  if (bounded) {
    const TransportReport t = verify_rp_transport(mu, c, probes);
    out.push_back(at_most("rp_transport", t.max_residual, 1e-6));
    out.push_back(at_most("constant_invisibility", t.max_constant_integral, 1e-8));
    const PolarReport p = polar_decomposition_check(mu, c, kPolarPoints);
    out.push_back(at_most("polar_decomposition", p.max_residual, 1e-3));
    const std::vector<cplx> zs{{0.0, 1.0}, {1.0, 0.5}, {-2.0, 1.0}};
    out.push_back(at_most("outer_inverse", outer_inverse_residual(mu, c, zs), 1e-8));
    out.push_back(at_most("cayley_chain", cayley_chain(mu, c, 8).max_entry_error, 1e-6));
  } else {
    for (const char* n : {"rp_transport", "constant_invisibility", "polar_decomposition",
                          "outer_inverse", "cayley_chain"}) {
      out.push_back(skipped(n, "widom verdict is not bounded"));
    }
  }
  const OSContractionReport g = contraction_check(mu, kGramTimes, kGramShift, tol);
  out.push_back({"hp_contraction", g.contraction ? "pass" : "fail", g.min_eigenvalue, -tol, {}});
  return out;
}

std::vector<Suite> disc_suites(const DiscMeasure& mu, const SectionData& d, double tol) {
  std::vector<Suite> out;
  double worst_contraction = INFINITY;
  for (int n : {4, 8, 16}) {
    worst_contraction = std::min(worst_contraction, contraction_check(d.moments, n, tol).min_eigenvalue);
  }
  out.push_back({"disc_contraction", worst_contraction >= -tol ? "pass" : "fail", worst_contraction,
                 -tol, {}});
  const bool unit_support = std::all_of(mu.atoms().begin(), mu.atoms().end(),
                                        [](const Atom& a) { return a.position >= 0.0; }) &&
                            std::all_of(mu.densities().begin(), mu.densities().end(),
                                        [](const JacobiDensity& p) { return p.lo >= 0.0; });
  if (unit_support) {
    double rise = 0.0;
    for (std::size_t j = 1; j < d.moments.values.size(); ++j) {
      rise = std::max(rise, d.moments.values[j] - d.moments.values[j - 1]);
    }
    out.push_back(at_most("monotone_moments", rise, 0.0));
  } else {
    out.push_back(skipped("monotone_moments", "support reaches below 0"));
  }
  double ibp = 0.0;
  for (int j : {0, 1, 3, 8}) ibp = std::max(ibp, integration_by_parts_residual(mu, j));
  out.push_back(at_most("integration_by_parts", ibp, 1e-8));

  const std::vector<cplx> a{{1.0, 0.0}, {0.5, -0.25}, {0.0, 1.0}};
  const std::vector<cplx> b{{0.25, 0.0}, {-1.0, 0.5}, {2.0, 0.0}};
  const cplx qm = quadratic_form(section_from_moments(d.moments, 3), a, b);
  const cplx qd = quadratic_form(mu, a, b);
  out.push_back(at_most("quadratic_form_agreement", std::abs(qm - qd) / std::max(std::abs(qd), 1e-300),
                        1e-12));
  return out;
}

json base_document(const ReportConfig& cfg, std::string_view spec_text) {
  return {{"schema_version", kSchemaVersion},
          {"command", to_string(cfg.command)},
          {"N", cfg.order},
          {"input_digest", "sha256:" + sha256_hex(spec_text)},
          {"widom", nullptr},
          {"sections", nullptr},
          {"symbol", nullptr},
          {"residuals", nullptr}};
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  for (const auto& c : kCommands) {
    if (name == c.name) return c.command;
  }
  return std::nullopt;
}

const char* to_string(Command c) {
  for (const auto& e : kCommands) {
    if (e.command == c) return e.name;
  }
  return "unknown";
}

RunOutcome execute(const ReportConfig& cfg, std::string_view spec_text) {
  RunOutcome out;
  out.document = base_document(cfg, spec_text);
  json& doc = out.document;
  const double tol = cfg.tol.value_or(1e-10);

  MeasureSpec spec;
  try {
    spec = parse_measure_spec(spec_text);
  } catch (const SpecError& e) {
    out.exit_code = kExitSpec;
    out.message = e.what();
    doc["error"] = out.message;
    return out;
  }
  doc["domain"] = to_string(spec.domain);

  try {
    switch (cfg.command) {
      case Command::kWidom: {
        doc["widom"] = to_json(widom_for(spec));
        break;
      }
      case Command::kPositivity: {
        const SectionData d = compute_sections(disc_side(spec), cfg.order, tol);
        doc["sections"] = sections_json(d, cfg.order);
        out.csv = section_csv(d.section.entries);
        break;
      }
      case Command::kSymbol: {
        const HalfPlaneMeasure& mu = need_half_plane(spec, cfg.command);
        const WidomReport w = widom_check(mu);
        doc["widom"] = to_json(w);
        require_bounded(w, cfg.command);
        const SymbolSamples s = sample_symbol(mu, SymbolGrid{cfg.grid_points, 6.0});
        doc["symbol"] = symbol_json(s, w);
        out.csv = symbol_csv(s);
        break;
      }
      case Command::kKernelCheck: {
        const HalfPlaneMeasure& mu = need_half_plane(spec, cfg.command);
        const WidomReport w = widom_check(mu);
        doc["widom"] = to_json(w);
        require_bounded(w, cfg.command);
        doc["residuals"] = kernel_residuals(mu);
        break;
      }
      case Command::kTransport: {
        const HalfPlaneMeasure& mu = need_half_plane(spec, cfg.command);
        const WidomReport w = widom_check(mu);
        doc["widom"] = to_json(w);
        require_bounded(w, cfg.command);
        doc["residuals"] = transport_residuals(mu, cfg.offset);
        break;
      }
      case Command::kReport: {
        const WidomReport w = widom_for(spec);
        doc["widom"] = to_json(w);
        const SectionData d = compute_sections(disc_side(spec), cfg.order, tol);
        doc["sections"] = sections_json(d, cfg.order);
        if (spec.half_plane && w.verdict == Verdict::kBounded) {
          const SymbolSamples s = sample_symbol(*spec.half_plane, SymbolGrid{cfg.grid_points, 6.0});
          doc["symbol"] = symbol_json(s, w);
          doc["residuals"] = kernel_residuals(*spec.half_plane);
        } else if (spec.half_plane) {
          doc["note"] = std::string("symbol and kernel residuals need a bounded verdict, widom verdict is ") +
                        to_string(w.verdict);
        }
        break;
      }
      case Command::kVerifyAll: {
        const WidomReport w = widom_for(spec);
        doc["widom"] = to_json(w);
        const DiscMeasure disc = disc_side(spec);
        const SectionData d = compute_sections(disc, cfg.order, tol);
        doc["sections"] = sections_json(d, cfg.order);
        std::vector<Suite> suites = common_suites(w, d);
        if (spec.half_plane) {
          const SymbolSamples s = sample_symbol(*spec.half_plane, SymbolGrid{cfg.grid_points, 6.0});
          doc["symbol"] = symbol_json(s, w);
          const auto more = half_plane_suites(*spec.half_plane, w, s, cfg.offset, tol);
          suites.insert(suites.end(), more.begin(), more.end());
        } else {
          const auto more = disc_suites(disc, d, tol);
          suites.insert(suites.end(), more.begin(), more.end());
        }
        json list = json::array();
        json residuals = json::object();
        std::vector<std::string> failed;
        for (const auto& s : suites) {
          list.push_back(suite_json(s));
          if (std::isfinite(s.worst)) residuals[s.name] = s.worst;
          if (s.status == "fail") failed.push_back(s.name);
        }
        doc["residuals"] = residuals;
        doc["suites"] = list;
        doc["passed"] = failed.empty();
        if (!failed.empty()) {
          out.exit_code = kExitSuiteFailure;
          out.message = "failed suites:";
          for (const auto& f : failed) out.message += " " + f;
        }
        break;
      }
    }
  } catch (const CommandFailure& f) {
    out.exit_code = f.code;
    out.message = f.message;
  } catch (const NotBoundedError& e) {
    out.exit_code = kExitUnbounded;
    out.message = e.what();
  } catch (const quad::QuadratureError& e) {
    out.exit_code = kExitQuadrature;
    out.message = e.what();
  }
  if (out.exit_code != kExitOk) doc["error"] = out.message;
  return out;
}

int run_report(const ReportConfig& cfg) {
  std::string text;
  try {
    text = read_file(cfg.spec_path);
  } catch (const SpecError& e) {
    json doc = base_document(cfg, "");
    doc["input_digest"] = nullptr;
    doc["error"] = e.what();
    write_atomic(cfg.out, doc.dump(2) + "\n");
    return kExitSpec;
  }
  const RunOutcome r = execute(cfg, text);
  write_atomic(cfg.out, r.document.dump(2) + "\n");
  if (cfg.csv && !r.csv.empty()) write_atomic(*cfg.csv, r.csv);
  return r.exit_code;
}

int run_verify(ReportConfig cfg) {
  cfg.command = Command::kVerifyAll;
  return run_report(cfg);
}

}  // namespace hankelrp
