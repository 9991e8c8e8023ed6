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

#include "bellsector/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bellsector/entanglement.hpp"
#include "bellsector/errors.hpp"
#include "bellsector/evolution.hpp"
#include "bellsector/group.hpp"
#include "bellsector/model.hpp"
#include "bellsector/rng.hpp"
#include "bellsector/sampling.hpp"
#include "bellsector/spectral.hpp"
#include "bellsector/synthesis.hpp"

namespace bellsector {

namespace {

constexpr Axis kAxes[3] = {Axis::X, Axis::Y, Axis::Z};

std::vector<Axis> selected_axes(const VerifyConfig& cfg) {
  if (cfg.only_axis) return {*cfg.only_axis};
  return {Axis::X, Axis::Y, Axis::Z};
}

CheckResult make_result(const std::string& name, double observed, double tol,
                        std::string note = {}) {
  CheckResult r;
  r.name = name;
  r.observed = observed;
  r.tol = tol;
  r.pass = observed <= tol;
  r.note = std::move(note);
  return r;
}

std::array<double, 4> sorted_closed_levels(const ModelParams& p) {
  auto v = closed_form_levels(p).values;
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::vector<CheckResult> verify_spectrum(const VerifyConfig& cfg) {
  std::vector<CheckResult> out;
  Rng rng(cfg.seed ^ 0x5bec7a13ULL);
  double worst = 0.0;
  for (Axis axis : selected_axes(cfg)) {
    for (int k = 0; k < cfg.spectral_draws; ++k) {
      const ModelParams p = random_params(rng, axis);
      const auto closed = sorted_closed_levels(p);
      const auto oracle = oracle_diagonalize(bell_hamiltonian(p));
      for (int i = 0; i < 4; ++i)
        worst = std::max(worst, std::abs(closed[i] - oracle.values[i]));
    }
  }
  out.push_back(make_result("spectrum/closed-vs-oracle-multiset", worst, 1e-10));

  ModelParams iso;
  iso.coupling = Vec3(1.0, 1.0, 1.0);
  iso.axis = Axis::Z;
  const auto levels = sorted_closed_levels(iso);
  const double expected[4] = {-1.0, -1.0, -1.0, 3.0};
  double iso_dev = 0.0;
  for (int i = 0; i < 4; ++i)
    iso_dev = std::max(iso_dev, std::abs(levels[i] - expected[i]));
  out.push_back(make_result("spectrum/isotropic-levels", iso_dev, 1e-12,
                            "J=(1,1,1), B=0: levels {-1,-1,-1,3}"));
  return out;
}

std::vector<CheckResult> verify_evolution(const VerifyConfig& cfg) {
  std::vector<CheckResult> out;
  Rng rng(cfg.seed ^ 0xe0017103ULL);
  double worst = 0.0;
  for (Axis axis : selected_axes(cfg)) {
    for (int k = 0; k < cfg.evolution_draws; ++k) {
      const ModelParams p = random_params(rng, axis);
      const double t = rng.uniform(0.0, 10.0);
      worst = std::max(
          worst, frobenius_distance(evolve_closed(p, t).mat, evolve_oracle(p, t)));
    }
  }
  out.push_back(make_result("evolution/closed-vs-oracle", worst, 1e-10));

  double ident = 0.0;
  Rng rng2(cfg.seed ^ 0x1d377117ULL);
  for (Axis axis : selected_axes(cfg)) {
    const ModelParams p = random_params(rng2, axis);
    ident = std::max(ident, frobenius_distance(evolve_closed(p, 0.0).mat,
                                               Mat4::Identity()));
  }
  out.push_back(make_result("evolution/identity-at-t0", ident, 0.0,
                            "U(0) = I with exact structural zeros"));
  return out;
}

std::vector<CheckResult> verify_structure(const VerifyConfig& cfg) {
  std::vector<CheckResult> out;
  Rng rng(cfg.seed ^ 0x57a0c701ULL);
  bool membership = true;
  double det_dev = 0.0;
  double rebuild_dev = 0.0;
  for (Axis axis : selected_axes(cfg)) {
    for (int k = 0; k < cfg.structure_draws; ++k) {
      const ModelParams p = random_params(rng, axis);
      const double t = rng.uniform(0.0, 10.0);
      const EvolutionOp op = evolve_closed(p, t);
      membership = membership && in_S_h(op.mat, axis, 1e-12);
      const Complex d1 = op.sectors[0].mat.determinant();
      const Complex d2 = op.sectors[1].mat.determinant();
      det_dev = std::max(det_dev, std::abs(d1 * d2 - Complex(1.0)));
      det_dev = std::max(det_dev, std::abs(d1 - std::conj(d2)));
      for (const Sector& s : extract_sectors(op)) {
        const Sector rebuilt = sector_from_exponential(
            s.phases.delta_plus, s.phases.delta_minus, s.bloch);
        rebuild_dev =
            std::max(rebuild_dev, frobenius_distance(rebuilt.mat, s.mat));
      }
    }
  }
  out.push_back(make_result("structure/sector-pattern-membership",
                            membership ? 0.0 : 1.0, 1e-12,
                            "unitary, det 1, zero pattern"));
  out.push_back(make_result("structure/sector-determinants-reciprocal",
                            det_dev, 1e-12));
  out.push_back(make_result("structure/exponential-round-trip", rebuild_dev,
                            1e-12));
  return out;
}

std::vector<CheckResult> verify_entanglement(const VerifyConfig& cfg) {
  std::vector<CheckResult> out;
  Rng rng(cfg.seed ^ 0xc03c0883ULL);

  double worst = 0.0;
  for (int k = 0; k < cfg.state_draws; ++k) {
    const BellVector v = random_state(rng);
    worst = std::max(worst,
                     std::abs(concurrence_bell(v) - concurrence_oracle(v)));
  }
  out.push_back(make_result("entanglement/bell-vs-spin-flip", worst, 1e-10));

  // Symmetric field: the minus-sector b vanishes, so the mu = +1
  // eigenstates carry exactly one bit of entanglement.
  double entropy_dev = 0.0;
  for (int k = 0; k < cfg.eigenstate_draws; ++k) {
    for (Axis axis : selected_axes(cfg)) {
      ModelParams p = random_params(rng, axis);
      p.field2 = p.field1;
      const auto reports = eigenstate_entanglement(p);
      for (int nu : {-1, +1}) {
        const auto& rep = reports[bell_index(+1, nu)];
        entropy_dev = std::max(entropy_dev, std::abs(rep.entropy - 1.0));
      }
    }
  }
  out.push_back(make_result("entanglement/symmetric-field-max-entropy",
                            entropy_dev, 0.0, "entropy exactly 1 at b = 0"));

  double period_dev = 0.0;
  for (Axis axis : selected_axes(cfg)) {
    for (int k = 0; k < 25; ++k) {
      const ModelParams p = random_params(rng, axis);
      const auto labels = bell_labels(static_cast<int>(rng.uniform(0.0, 4.0)));
      const double rabi = bell_pair_rabi(p, labels[0], labels[1]);
      if (rabi < 1e-6) continue;
      const double period = M_PI / rabi;
      for (int g = 0; g < 8; ++g) {
        const double t = rng.uniform(0.0, 3.0 * period);
        const auto a = bell_concurrence_evolution(p, labels[0], labels[1], t);
        const auto b =
            bell_concurrence_evolution(p, labels[0], labels[1], t + period);
        period_dev = std::max(period_dev, std::abs(a.oracle - b.oracle));
      }
    }
  }
  out.push_back(make_result("entanglement/concurrence-periodicity",
                            period_dev, 1e-8, "period pi / R"));

  // Gap between the compact sector expression and the exact value; the
  // check is that the report exists, the gap itself is documented output.
  double max_gap = 0.0, max_gap_exact0 = 0.0;
  int gap_samples = 0;
  for (Axis axis : selected_axes(cfg)) {
    for (int k = 0; k < 50; ++k) {
      const ModelParams p = random_params(rng, axis);
      const auto labels = bell_labels(static_cast<int>(rng.uniform(0.0, 4.0)));
      const double t = rng.uniform(0.0, 10.0);
      const auto s = bell_concurrence_evolution(p, labels[0], labels[1], t);
      max_gap = std::max(max_gap, s.gap);
      ++gap_samples;
      const auto s0 = bell_concurrence_evolution(p, labels[0], labels[1], 0.0);
      max_gap_exact0 = std::max(max_gap_exact0, s0.gap);
    }
  }
  std::ostringstream gap_note;
  gap_note << "sector-form vs oracle gap over " << gap_samples
           << " samples: max " << max_gap << " (0 at t = 0: " << max_gap_exact0
           << ")";
  out.push_back(
      make_result("entanglement/sector-form-gap-reported", 0.0, 1.0,
                  gap_note.str()));
  return out;
}

std::vector<CheckResult> verify_group(const VerifyConfig& cfg) {
  std::vector<CheckResult> out;
  Rng rng(cfg.seed ^ 0x600b1a37ULL);

  // Same-label product closure with the predicted angles.
  double closure_dev = 0.0;
  bool closure_all = true;
  for (Axis axis : selected_axes(cfg)) {
    const auto [u_dir, w_dir] = bloch_plane(axis);
    for (int k = 0; k < cfg.closure_draws; ++k) {
      const double phi_a = rng.uniform(0.0, 2.0 * M_PI);
      const double phi_b = rng.uniform(0.0, 2.0 * M_PI);
      const Vec3 na = std::cos(phi_a) * u_dir + std::sin(phi_a) * w_dir;
      const Vec3 nb = std::cos(phi_b) * u_dir + std::sin(phi_b) * w_dir;
      const int s0 = rng.uniform() < 0.5 ? +1 : -1;
      const int s1 = rng.uniform() < 0.5 ? +1 : -1;
      const PulseSpec p1 = pulse_from_sector_axes(
          axis, na, rng.uniform(0.0, 6.0), nb, rng.uniform(0.0, 6.0),
          rng.uniform(-2.0, 2.0), 1.0);
      const PulseSpec p2 = pulse_from_sector_axes(
          axis, Vec3(s0 * na), rng.uniform(0.0, 6.0), Vec3(s1 * nb),
          rng.uniform(0.0, 6.0), rng.uniform(-2.0, 2.0), 1.0);
      const auto res = product_closure_check(p1, p2);
      if (!std::holds_alternative<ClosurePrescription>(res)) {
        closure_all = false;
        continue;
      }
      const auto& pres = std::get<ClosurePrescription>(res);
      const Mat4 direct = evolve(p2).mat * evolve(p1).mat;
      closure_dev = std::max(closure_dev,
                             frobenius_distance(pres.predicted, direct));
      closure_dev = std::max(
          closure_dev, frobenius_distance(evolve(pres.realized).mat, direct));
    }
  }
  out.push_back(make_result("group/closure-predicted-product",
                            closure_all ? closure_dev : 1.0, 1e-10));

  // Inverse prescriptions on random pulses.
  double inverse_dev = 0.0;
  int feasible = 0;
  for (int k = 0; k < cfg.inverse_draws; ++k) {
    const Axis axis = kAxes[k % 3];
    if (cfg.only_axis && axis != *cfg.only_axis) continue;
    const PulseSpec p = random_pulse(rng, axis, 3.0, 2.0);
    const auto res = find_inverse(p, InversePolicy::TuneAll, 16);
    if (std::holds_alternative<Infeasible>(res)) continue;
    ++feasible;
    const PulseSpec& inv = std::get<PulseSpec>(res);
    const Mat4 round_trip = evolve(inv).mat * evolve(p).mat;
    inverse_dev =
        std::max(inverse_dev, frobenius_distance(round_trip, Mat4::Identity()));
  }
  std::ostringstream inv_note;
  inv_note << feasible << " feasible branches";
  out.push_back(make_result("group/inverse-prescriptions",
                            feasible > 0 ? inverse_dev : 1.0, 1e-10,
                            inv_note.str()));

  // Sector composition rule against the direct 2x2 product.
  double bch_dev = 0.0;
  for (int k = 0; k < cfg.bch_draws; ++k) {
    const Sector s1 = sector_from_exponential(
        rng.uniform(-M_PI, M_PI), rng.uniform(0.0, 2.0 * M_PI), rng.unit_vec3());
    const Sector s2 = sector_from_exponential(
        rng.uniform(-M_PI, M_PI), rng.uniform(0.0, 2.0 * M_PI), rng.unit_vec3());
    const Sector comp = compose_bch(s1, s2);
    bch_dev = std::max(bch_dev,
                       frobenius_distance(comp.mat, Mat2(s1.mat * s2.mat)));
  }
  out.push_back(make_result("group/sector-composition-rule", bch_dev, 1e-12));

  // Diagonal-family elements commute with pulse products.
  double commute_dev = 0.0;
  for (Axis axis : selected_axes(cfg)) {
    const NormalityReport rep = normality_witness(axis, cfg.commute_draws, rng);
    commute_dev = std::max(commute_dev, rep.max_commutator);
    commute_dev = std::max(commute_dev, rep.max_conjugation_defect);
  }
  out.push_back(
      make_result("group/diagonal-family-commutes", commute_dev, 1e-10));

  // Group axioms within fixed labeled families: many member pairs per
  // label, checking closure onto the same label, commutativity, and the
  // inverse construction.
  double family_dev = 0.0;
  bool family_ok = true;
  for (Axis axis : selected_axes(cfg)) {
    const auto [u_dir, w_dir] = bloch_plane(axis);
    for (int fam = 0; fam < 2; ++fam) {
      const double phi_a = rng.uniform(0.0, 2.0 * M_PI);
      const double phi_b = rng.uniform(0.0, 2.0 * M_PI);
      const Vec3 na = std::cos(phi_a) * u_dir + std::sin(phi_a) * w_dir;
      const Vec3 nb = std::cos(phi_b) * u_dir + std::sin(phi_b) * w_dir;
      const auto member = [&]() {
        const int s0 = rng.uniform() < 0.5 ? +1 : -1;
        const int s1 = rng.uniform() < 0.5 ? +1 : -1;
        return pulse_from_sector_axes(axis, Vec3(s0 * na),
                                      rng.uniform(0.0, 6.0), Vec3(s1 * nb),
                                      rng.uniform(0.0, 6.0),
                                      rng.uniform(-2.0, 2.0), 1.0);
      };
      const GroupLabel family = subgroup_label(member());
      for (int k = 0; k < cfg.commute_draws; ++k) {
        const PulseSpec g1 = member();
        const PulseSpec g2 = member();
        const Mat4 u1 = evolve(g1).mat;
        const Mat4 u2 = evolve(g2).mat;
        family_ok = family_ok && labels_match(subgroup_label(g2), family);
        const auto closed = product_closure_check(g1, g2);
        if (!std::holds_alternative<ClosurePrescription>(closed)) {
          family_ok = false;
          continue;
        }
        const Mat4 product = u2 * u1;
        family_dev = std::max(family_dev,
                              frobenius_distance(
                                  std::get<ClosurePrescription>(closed).predicted,
                                  product));
        family_dev = std::max(family_dev, (u1 * u2 - product).norm());
        const auto inv = find_inverse(g1, InversePolicy::TuneAll, 16);
        if (!std::holds_alternative<PulseSpec>(inv)) {
          family_ok = false;
          continue;
        }
        family_ok =
            family_ok && labels_match(subgroup_label(std::get<PulseSpec>(inv)),
                                      family);
        const Mat4 cancel = evolve(std::get<PulseSpec>(inv)).mat * u1;
        family_dev = std::max(family_dev,
                              (cancel - Mat4::Identity()).norm());
      }
    }
  }
  out.push_back(make_result("group/labeled-family-axioms",
                            family_ok ? family_dev : 1.0, 1e-10,
                            "closure, commutativity, identity, inverse"));
  return out;
}

std::vector<CheckResult> verify_rotation(const VerifyConfig& cfg) {
  std::vector<CheckResult> out;
  Rng rng(cfg.seed ^ 0xa07a7303ULL);
  double conj_dev = 0.0;
  double angle_dev = 0.0;
  for (int k = 0; k < cfg.rotation_draws; ++k) {
    const ModelParams pz = random_params(rng, Axis::Z);
    const double t = rng.uniform(0.0, 5.0);
    const EvolutionOp uz = evolve_closed(pz, t);
    for (Axis target : {Axis::X, Axis::Y}) {
      const Mat4 r = bipartite_rotation_bell(angles_z_to(target));
      const Mat4 conjugated = r * uz.mat * r.adjoint();
      const EvolutionOp ut = evolve_closed(rotated_params(pz, target), t);
      conj_dev = std::max(conj_dev, frobenius_distance(conjugated, ut.mat));
      // Sector angles survive the change of axis (match sectors by label).
      for (const Sector& sz : uz.sectors)
        for (const Sector& st : ut.sectors)
          if (sz.mu == st.mu) {
            angle_dev = std::max(angle_dev, std::abs(sz.phases.delta_plus -
                                                     st.phases.delta_plus));
            angle_dev = std::max(angle_dev, std::abs(sz.phases.delta_minus -
                                                     st.phases.delta_minus));
          }
    }
  }
  out.push_back(make_result("rotation/conjugation-identities", conj_dev, 1e-10));
  out.push_back(make_result("rotation/sector-angles-preserved", angle_dev, 1e-10));
  return out;
}

std::vector<CheckResult> verify_synthesis(const VerifyConfig& cfg) {
  std::vector<CheckResult> out;
  Rng rng(cfg.seed ^ 0x5f373515ULL);

  double max_residual = 0.0;
  bool all_solved = true;
  int total = 0;
  for (Axis axis : selected_axes(cfg)) {
    const CoverageReport rep =
        coverage_experiment(axis, cfg.synthesis_targets, 1e-8, rng);
    total += rep.samples;
    all_solved = all_solved && (rep.successes == rep.samples);
    max_residual = std::max(max_residual, rep.max_residual);
  }
  std::ostringstream note;
  note << total << " Haar targets, success required 100%";
  out.push_back(make_result("synthesis/two-pulse-coverage",
                            all_solved ? max_residual : 1.0, 1e-8,
                            note.str()));

  // Exchange pulse on a template with a vanishing pair coupling.
  ModelParams ex;
  ex.coupling = Vec3(0.7, -0.7, 0.3);
  ex.field1 = 0.9;
  ex.field2 = 0.4;
  ex.axis = Axis::Z;
  double swap_dev = 1.0;
  const auto exch = find_exchange(ex);
  if (std::holds_alternative<PulseSpec>(exch)) {
    const PulseSpec& pulse = std::get<PulseSpec>(exch);
    const Mat4 u = evolve(pulse).mat;
    // J1 = -J2 empties the plus pair, so the mu = +1 sector swaps
    // beta_{-nu} <-> beta_{+nu} on its row pair.
    const auto rows = sector_rows(Axis::Z)[1];
    swap_dev = std::max(std::abs(std::abs(u(rows[1], rows[0])) - 1.0),
                        std::abs(std::abs(u(rows[0], rows[1])) - 1.0));
  }
  out.push_back(make_result("synthesis/exchange-swaps-bell-pair", swap_dev,
                            1e-8, "J1 = -J2, t = pi/(2R)"));

  ModelParams loop_case;
  loop_case.coupling = Vec3(0.0, 0.0, 1.0);
  loop_case.axis = Axis::Z;
  const Mat4 u_pi = evolve_closed(loop_case, M_PI).mat;
  const double loop_dev = (u_pi + Mat4::Identity()).norm();
  const auto loops = find_evolution_loop(loop_case, 20.0);
  bool found_pi = false;
  for (const auto& cand : loops.exact)
    if (std::abs(cand.time - M_PI) < 1e-9 && cand.sign == -1) found_pi = true;
  out.push_back(make_result("synthesis/exact-loop-at-pi",
                            found_pi ? loop_dev : 1.0, 1e-10,
                            "J=(0,0,1), B=0: U(pi) = -I"));
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "spectrum",      "evolution", "structure", "entanglement",
      "group",         "rotation",  "synthesis"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite,
                                   const VerifyConfig& cfg) {
  if (suite == "spectrum") return verify_spectrum(cfg);
  if (suite == "evolution") return verify_evolution(cfg);
  if (suite == "structure") return verify_structure(cfg);
  if (suite == "entanglement") return verify_entanglement(cfg);
  if (suite == "group") return verify_group(cfg);
  if (suite == "rotation") return verify_rotation(cfg);
  if (suite == "synthesis") return verify_synthesis(cfg);
  if (suite == "all") {
    std::vector<CheckResult> all;
    for (const auto& name : suite_names()) {
      auto results = run_suite(name, cfg);
      all.insert(all.end(), results.begin(), results.end());
    }
    return all;
  }
  throw InvalidInput("unknown verification suite \"" + suite + "\"");
}

}  // namespace bellsector
