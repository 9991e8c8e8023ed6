// Copyright 2026 The bellsector Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command line front end: spectrum | evolve | entangle | sector | verify |
// synthesize | loops.  Exit codes: 0 success, 1 verification or solver
// failure, 2 invalid input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bellsector/entanglement.hpp"
#include "bellsector/errors.hpp"
#include "bellsector/evolution.hpp"
#include "bellsector/group.hpp"
#include "bellsector/model.hpp"
#include "bellsector/sampling.hpp"
#include "bellsector/spectral.hpp"
#include "bellsector/synthesis.hpp"
#include "bellsector/verify.hpp"

namespace bs = bellsector;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitBadInput = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw bs::InvalidInput("cannot open parameter file \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out)
    throw bs::InvalidInput("cannot open output file \"" + out_path + "\"");
  out << text;
}

std::string fmt17(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

json complex_pair(const bs::Complex& z) {
  return json::array({z.real(), z.imag()});
}

json matrix4_json(const bs::Mat4& m) {
  json rows = json::array();
  for (int r = 0; r < 4; ++r) {
    json row = json::array();
    for (int c = 0; c < 4; ++c) row.push_back(complex_pair(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

json matrix2_json(const bs::Mat2& m) {
  json rows = json::array();
  for (int r = 0; r < 2; ++r) {
    json row = json::array();
    for (int c = 0; c < 2; ++c) row.push_back(complex_pair(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

json pulse_json(const bs::PulseSpec& p) {
  return json{{"J", {p.params.coupling[0], p.params.coupling[1],
                     p.params.coupling[2]}},
              {"B1", p.params.field1},
              {"B2", p.params.field2},
              {"axis", bs::axis_name(p.params.axis)},
              {"t", p.duration}};
}

json sector_json(const bs::Sector& s) {
  json j;
  j["rows"] = {s.row_k + 1, s.row_l + 1};  // 1-based, matching the docs
  j["hosted_label"] = s.mu;
  j["delta_plus"] = s.phases.delta_plus;
  j["delta_minus"] = s.phases.delta_minus;
  j["axis_observable"] = s.axis_observable;
  j["bloch_axis"] = {s.bloch[0], s.bloch[1], s.bloch[2]};
  j["matrix"] = matrix2_json(s.mat);
  return j;
}

struct CommonOpts {
  std::string params_path;
  std::string out_path;
  std::string format;  // resolved per command when empty
  std::uint64_t seed = 42;
  double tol = 0.0;  // 0 = command default

  std::string format_or(const std::string& fallback) const {
    if (format.empty()) return fallback;
    if (format != "csv" && format != "json")
      throw bs::InvalidInput("format must be csv or json");
    return format;
  }
};

int cmd_spectrum(const CommonOpts& opts) {
  if (opts.format_or("json") != "json")
    throw bs::InvalidInput("spectrum emits json only");
  const bs::ModelParams p = bs::params_from_json(read_file(opts.params_path));
  const bs::EigenSystem sys = bs::closed_form_vectors(p);
  const bs::Mat4 h = bs::bell_hamiltonian(p);
  const bs::OracleEigenSystem oracle = bs::oracle_diagonalize(h);

  double residual = 0.0;
  for (const bs::EigenPair& pair : sys.pairs)
    residual = std::max(residual,
                        (h * pair.vector - pair.value * pair.vector).norm());
  auto closed_sorted = sys.levels().values;
  std::sort(closed_sorted.begin(), closed_sorted.end());
  for (int k = 0; k < 4; ++k)
    residual =
        std::max(residual, std::abs(closed_sorted[k] - oracle.values[k]));

  json doc;
  for (int idx = 0; idx < 4; ++idx) {
    const auto labels = bs::bell_labels(idx);
    doc["levels"][bs::bell_label_name(labels[0], labels[1])] =
        sys.pairs[idx].value;
  }
  json vectors = json::array();
  for (int idx = 0; idx < 4; ++idx) {
    json amps = json::array();
    for (int r = 0; r < 4; ++r)
      amps.push_back(complex_pair(sys.pairs[idx].vector[r]));
    vectors.push_back(amps);
  }
  doc["vectors_bell"] = vectors;
  doc["oracle_residual"] = residual;
  write_output(opts.out_path, doc.dump(2));
  return kExitOk;
}

int cmd_evolve(const CommonOpts& opts, double t0, double t1, int steps) {
  if (steps < 1) throw bs::InvalidInput("steps must be >= 1");
  if (t1 < t0) throw bs::InvalidInput("t1 must be >= t0");
  const bs::ModelParams p = bs::params_from_json(read_file(opts.params_path));

  std::ostringstream csv;
  csv << "t";
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      csv << ",u" << r << c << "_re,u" << r << c << "_im";
  csv << ",s1_delta_plus,s1_delta_minus,s2_delta_plus,s2_delta_minus\n";

  const std::string format = opts.format_or("csv");
  json rows = json::array();
  for (int k = 0; k < steps; ++k) {
    const double t =
        (steps == 1) ? t0 : t0 + (t1 - t0) * static_cast<double>(k) / (steps - 1);
    const bs::EvolutionOp op = bs::evolve_closed(p, t);
    if (format == "csv") {
      csv << fmt17(t);
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
          csv << ',' << fmt17(op.mat(r, c).real()) << ','
              << fmt17(op.mat(r, c).imag());
      for (const bs::Sector& s : op.sectors)
        csv << ',' << fmt17(s.phases.delta_plus) << ','
            << fmt17(s.phases.delta_minus);
      csv << '\n';
    } else {
      json row;
      row["t"] = t;
      row["matrix"] = matrix4_json(op.mat);
      row["sectors"] = {sector_json(op.sectors[0]), sector_json(op.sectors[1])};
      rows.push_back(row);
    }
  }
  if (format == "csv") {
    write_output(opts.out_path, csv.str());
  } else {
    write_output(opts.out_path, rows.dump(2));
  }
  return kExitOk;
}

int cmd_entangle(const CommonOpts& opts, const std::string& state, double t0,
                 double t1, int steps) {
  if (steps < 1) throw bs::InvalidInput("steps must be >= 1");
  if (t1 < t0) throw bs::InvalidInput("t1 must be >= t0");
  const bs::ModelParams p = bs::params_from_json(read_file(opts.params_path));

  if (state.rfind("bell:", 0) != 0 || state.size() != 7)
    throw bs::InvalidInput(
        "state must be bell:SS with S in {-,+}, e.g. bell:-+");
  const auto sign_of = [](char c) -> int {
    if (c == '-') return -1;
    if (c == '+') return +1;
    throw bs::InvalidInput("state labels must be '-' or '+'");
  };
  const int mu = sign_of(state[5]);
  const int nu = sign_of(state[6]);
  const std::string format = opts.format_or("csv");

  std::ostringstream csv;
  csv << "t,C_closed,C_oracle,S_oracle\n";
  json rows = json::array();
  for (int k = 0; k < steps; ++k) {
    const double t =
        (steps == 1) ? t0 : t0 + (t1 - t0) * static_cast<double>(k) / (steps - 1);
    const auto sample = bs::bell_concurrence_evolution(p, mu, nu, t);
    bs::BellVector v = bs::BellVector::Zero();
    v[bs::bell_index(mu, nu)] = 1.0;
    const bs::BellVector evolved = bs::evolve_closed(p, t).mat * v;
    bs::EntanglementReport rep = bs::schmidt_and_entropy(evolved);
    if (format == "csv") {
      csv << fmt17(t) << ',' << fmt17(sample.sector_form) << ','
          << fmt17(sample.oracle) << ',' << fmt17(rep.entropy) << '\n';
    } else {
      rows.push_back(json{{"t", t},
                          {"C_closed", sample.sector_form},
                          {"C_oracle", sample.oracle},
                          {"S_oracle", rep.entropy}});
    }
  }
  write_output(opts.out_path, format == "csv" ? csv.str() : rows.dump(2));
  return kExitOk;
}

int cmd_sector(const CommonOpts& opts, double t) {
  if (opts.format_or("json") != "json")
    throw bs::InvalidInput("sector emits json only");
  const bs::ModelParams p = bs::params_from_json(read_file(opts.params_path));
  const bs::EvolutionOp op = bs::evolve_closed(p, t);
  json doc;
  doc["axis"] = bs::axis_name(p.axis);
  doc["t"] = t;
  doc["sectors"] = {sector_json(op.sectors[0]), sector_json(op.sectors[1])};
  const bs::GroupLabel label = bs::subgroup_label(bs::PulseSpec{p, t});
  doc["label"] = {{"abs_j", {label.abs_j[0], label.abs_j[1]}},
                  {"sign_b", {label.sign_b[0], label.sign_b[1]}}};
  const bs::Classification cls = bs::classify_special(op);
  const char* names[] = {"global_phase", "diagonal_family",
                         "sector_phase_only", "generic"};
  doc["class"] = names[static_cast<int>(cls.primary)];
  write_output(opts.out_path, doc.dump(2));
  return kExitOk;
}

int cmd_verify(const CommonOpts& opts, const std::string& suite,
               const std::string& axis, int samples) {
  bs::VerifyConfig cfg;
  cfg.seed = opts.seed;
  if (axis != "all") cfg.only_axis = bs::axis_from_name(axis);
  if (samples < 0 || samples > 1000000)
    throw bs::InvalidInput("samples must be between 0 and 1000000");
  if (samples > 0) {
    cfg.spectral_draws = samples;
    cfg.evolution_draws = samples;
    cfg.structure_draws = std::max(1, samples / 5);
    cfg.state_draws = samples * 10;
    cfg.eigenstate_draws = std::max(1, samples / 5);
    cfg.closure_draws = std::max(1, samples / 10);
    cfg.inverse_draws = std::max(1, samples / 10);
    cfg.bch_draws = samples * 10;
    cfg.commute_draws = std::max(1, samples / 10);
    cfg.rotation_draws = std::max(1, samples / 10);
    cfg.synthesis_targets = samples;
  }

  const std::vector<bs::CheckResult> results = bs::run_suite(suite, cfg);
  std::ostringstream table;
  for (const auto& r : results) {
    table << (r.pass ? "PASS" : "FAIL") << "  " << r.name
          << "  max_dev=" << fmt17(r.observed) << "  tol=" << fmt17(r.tol);
    if (!r.note.empty()) table << "  (" << r.note << ")";
    table << '\n';
  }
  const bool ok = bs::all_passed(results);
  table << (ok ? "ALL CHECKS PASSED" : "CHECKS FAILED") << '\n';
  write_output(opts.out_path, table.str());
  return ok ? kExitOk : kExitFailure;
}

int cmd_synthesize(const CommonOpts& opts, const std::string& axis,
                   const std::string& target_text, int sector_index) {
  if (sector_index != 0 && sector_index != 1)
    throw bs::InvalidInput("sector index must be 0 or 1");
  bs::SynthesisTarget target;
  target.axis = bs::axis_from_name(axis);
  target.sector_index = sector_index;
  if (opts.tol > 0.0) target.tolerance = opts.tol;

  // --target "axis=nx,ny,nz;angle=a" or "matrix=re,im,...x4" (row major).
  const auto split = [](const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(item);
    return parts;
  };
  std::optional<bs::Vec3> axis_spec;
  std::optional<double> angle_spec;
  std::optional<bs::Mat2> matrix_spec;
  for (const std::string& field : split(target_text, ';')) {
    const auto eq = field.find('=');
    if (eq == std::string::npos)
      throw bs::InvalidInput("target fields must look like key=value");
    const std::string key = field.substr(0, eq);
    const std::string value = field.substr(eq + 1);
    const auto nums = split(value, ',');
    const auto to_num = [&](const std::string& s) {
      try {
        size_t used = 0;
        const double x = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return x;
      } catch (const std::exception&) {
        throw bs::InvalidInput("target value \"" + s + "\" is not a number");
      }
    };
    if (key == "axis") {
      if (nums.size() != 3)
        throw bs::InvalidInput("target axis needs three components");
      axis_spec = bs::Vec3(to_num(nums[0]), to_num(nums[1]), to_num(nums[2]));
    } else if (key == "angle") {
      if (nums.size() != 1) throw bs::InvalidInput("angle needs one value");
      angle_spec = to_num(nums[0]);
    } else if (key == "matrix") {
      if (nums.size() != 8)
        throw bs::InvalidInput("matrix needs 8 numbers (re,im row major)");
      bs::Mat2 m;
      for (int e = 0; e < 4; ++e)
        m(e / 2, e % 2) = bs::Complex(to_num(nums[2 * e]), to_num(nums[2 * e + 1]));
      matrix_spec = m;
    } else {
      throw bs::InvalidInput("unknown target field \"" + key + "\"");
    }
  }
  if (matrix_spec) {
    target.unitary = *matrix_spec;
  } else if (axis_spec && angle_spec) {
    const double norm = axis_spec->norm();
    if (norm == 0.0) throw bs::InvalidInput("target axis must be nonzero");
    target = bs::target_from_axis_angle(target.axis, *axis_spec / norm,
                                        *angle_spec, sector_index,
                                        target.tolerance);
  } else {
    throw bs::InvalidInput(
        "target needs either matrix=... or axis=...;angle=...");
  }

  try {
    const bs::TwoPulseSolution sol = bs::synthesize_two_pulse(target);
    json doc;
    doc["sequence"] = {pulse_json(sol.pulses[0]), pulse_json(sol.pulses[1])};
    doc["residual"] = sol.residual;
    doc["removed_phase"] = sol.removed_phase;
    doc["frame"] = {
        {"n", {sol.frame_n[0], sol.frame_n[1], sol.frame_n[2]}},
        {"n_perp",
         {sol.frame_n_perp[0], sol.frame_n_perp[1], sol.frame_n_perp[2]}},
        {"n_tilde",
         {sol.frame_n_tilde[0], sol.frame_n_tilde[1], sol.frame_n_tilde[2]}}};
    doc["angles"] = {{"alpha", sol.angle_alpha},
                     {"beta", sol.angle_beta},
                     {"delta", sol.angle_delta}};
    doc["achieved_sector"] = matrix2_json(sol.achieved);
    doc["companion_sector"] = matrix2_json(sol.companion);
    write_output(opts.out_path, doc.dump(2));
    return kExitOk;
  } catch (const bs::SolverFailure& e) {
    json diag;
    diag["error"] = e.what();
    std::cerr << diag.dump() << '\n';
    return kExitFailure;
  }
}

int cmd_loops(const CommonOpts& opts, double horizon) {
  if (opts.format_or("json") != "json")
    throw bs::InvalidInput("loops emits json only");
  const bs::ModelParams p = bs::params_from_json(read_file(opts.params_path));
  const double tol = opts.tol > 0.0 ? opts.tol : 1e-10;
  const bs::LoopSearchResult res = bs::find_evolution_loop(p, horizon, tol);
  json doc;
  doc["exact_found"] = res.exact_found;
  const auto to_json = [](const bs::LoopCandidate& c) {
    return json{{"time", c.time}, {"residual", c.residual}, {"sign", c.sign}};
  };
  doc["exact"] = json::array();
  for (const auto& c : res.exact) doc["exact"].push_back(to_json(c));
  doc["approximants"] = json::array();
  for (const auto& c : res.approximants)
    doc["approximants"].push_back(to_json(c));
  write_output(opts.out_path, doc.dump(2));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Closed-form dynamics, Bell-sector algebra and pulse synthesis for the "
      "driven two-qubit anisotropic Ising model"};
  app.require_subcommand(1);

  CommonOpts opts;

  auto add_common = [&](CLI::App* sub, bool needs_params) {
    if (needs_params)
      sub->add_option("--params", opts.params_path, "parameter JSON file")
          ->required();
    sub->add_option("--out", opts.out_path, "output file (default stdout)");
    sub->add_option("--format", opts.format, "csv or json");
    sub->add_option("--seed", opts.seed, "random seed");
    sub->add_option("--tol", opts.tol, "tolerance override");
  };

  auto* spectrum = app.add_subcommand("spectrum", "closed-form eigensystem");
  add_common(spectrum, true);

  double t0 = 0.0, t1 = 10.0, t_single = 0.0, horizon = 0.0;
  int steps = 400;
  auto* evolve = app.add_subcommand("evolve", "propagator over a time grid");
  add_common(evolve, true);
  evolve->add_option("--t0", t0, "start time");
  evolve->add_option("--t1", t1, "end time");
  evolve->add_option("--steps", steps, "number of grid points");

  std::string state = "bell:--";
  auto* entangle =
      app.add_subcommand("entangle", "concurrence along the evolution");
  add_common(entangle, true);
  entangle->add_option("--state", state, "initial state, bell:SS");
  entangle->add_option("--t0", t0, "start time");
  entangle->add_option("--t1", t1, "end time");
  entangle->add_option("--steps", steps, "number of grid points");

  auto* sector = app.add_subcommand("sector", "sector decomposition at one time");
  add_common(sector, true);
  sector->add_option("--t", t_single, "evolution time");

  std::string suite = "all", verify_axis = "all";
  int samples = 0;
  auto* verify = app.add_subcommand("verify", "run the verification suites");
  add_common(verify, false);
  verify->add_option("--suite", suite, "suite name or 'all'");
  verify->add_option("--axis", verify_axis, "restrict to one axis");
  verify->add_option("--samples", samples, "random draws per check");

  std::string synth_axis = "z", target_text;
  int sector_index = 0;
  auto* synthesize =
      app.add_subcommand("synthesize", "two-pulse realization of a sector");
  add_common(synthesize, false);
  synthesize->add_option("--axis", synth_axis, "field axis");
  synthesize->add_option("--target", target_text, "axis=..;angle=.. or matrix=..")
      ->required();
  synthesize->add_option("--sector", sector_index, "target sector index (0/1)");

  auto* loops = app.add_subcommand("loops", "search for evolution loops");
  add_common(loops, true);
  loops->add_option("--horizon", horizon, "search horizon (time units)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (opts.tol < 0.0)
      throw bs::InvalidInput("tolerance overrides must be positive");
    if (spectrum->parsed()) return cmd_spectrum(opts);
    if (evolve->parsed()) return cmd_evolve(opts, t0, t1, steps);
    if (entangle->parsed()) return cmd_entangle(opts, state, t0, t1, steps);
    if (sector->parsed()) return cmd_sector(opts, t_single);
    if (verify->parsed()) return cmd_verify(opts, suite, verify_axis, samples);
    if (synthesize->parsed())
      return cmd_synthesize(opts, synth_axis, target_text, sector_index);
    if (loops->parsed()) return cmd_loops(opts, horizon);
  } catch (const bs::InvalidInput& e) {
    json diag;
    diag["error"] = e.what();
    std::cerr << diag.dump() << '\n';
    return kExitBadInput;
  } catch (const std::exception& e) {
    json diag;
    diag["error"] = e.what();
    std::cerr << diag.dump() << '\n';
    return kExitFailure;
  }
  return kExitBadInput;
}
