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

#include <catch2/catch_amalgamated.hpp>

#include "bellsector/errors.hpp"
#include "bellsector/group.hpp"
#include "bellsector/rng.hpp"
#include "bellsector/sampling.hpp"
#include "bellsector/spectral.hpp"
#include "bellsector/synthesis.hpp"

using namespace bellsector;
using Catch::Approx;

TEST_CASE("membership predicate accepts generated operators") {
  Rng rng(61);
  for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
    REQUIRE(in_S_h(Mat4::Identity(), axis));
    for (int k = 0; k < 30; ++k) {
      const Mat4 u =
          evolve_closed(random_params(rng, axis), rng.uniform(0.0, 8.0)).mat;
      REQUIRE(in_S_h(u, axis, 1e-12));
    }
  }
}

TEST_CASE("membership predicate rejects a dense special unitary") {
  Rng rng(62);
  const Mat4 h = rng.random_hermitian4();
  const OracleEigenSystem sys = oracle_diagonalize(h);
  Mat4 u = Mat4::Zero();
  for (int c = 0; c < 4; ++c) {
    const Vec4 v = sys.vectors.col(c);
    // Traceless exponent makes the determinant one.
    const double shifted =
        sys.values[c] - 0.25 * (sys.values[0] + sys.values[1] +
                                sys.values[2] + sys.values[3]);
    u += std::polar(1.0, -shifted) * (v * v.adjoint());
  }
  REQUIRE(std::abs(u.determinant() - Complex(1.0)) < 1e-10);
  for (Axis axis : {Axis::X, Axis::Y, Axis::Z})
    REQUIRE_FALSE(in_S_h(u, axis, 1e-10));
}

TEST_CASE("subgroup labels from pulses and matrices agree") {
  Rng rng(63);
  for (int k = 0; k < 60; ++k) {
    const Axis axis = static_cast<Axis>(1 + k % 3);
    const PulseSpec p = random_pulse(rng, axis, 3.0, 2.0);
    const GroupLabel from_pulse = subgroup_label(p);
    const EvolutionOp op = evolve(p);
    bool observable = true;
    for (const Sector& s : op.sectors) observable = observable && s.axis_observable;
    if (!observable) continue;
    const GroupLabel from_matrix = subgroup_label(op.mat, axis);
    REQUIRE(labels_match(from_pulse, from_matrix));
  }
}

TEST_CASE("zero-field pulses carry the (1, 0) label in both sectors") {
  Rng rng(64);
  ModelParams p = random_params(rng, Axis::X);
  p.field1 = 0.0;
  p.field2 = 0.0;
  const GroupLabel label = subgroup_label(PulseSpec{p, 1.0});
  for (int j = 0; j < 2; ++j) {
    REQUIRE(label.abs_j[j] == Approx(1.0).margin(1e-12));
    REQUIRE(label.sign_b[j] == 0);
  }
}

TEST_CASE("worked label example: symmetric unit field on the isotropic point") {
  ModelParams p;
  p.coupling = Vec3(1.0, 1.0, 1.0);
  p.field1 = 1.0;
  p.field2 = 1.0;
  p.axis = Axis::Z;
  const GroupLabel label = subgroup_label(PulseSpec{p, 1.0});
  // First sector (hosting the minus label): |j| = 0, positive b.
  REQUIRE(label.abs_j[0] == Approx(0.0).margin(1e-12));
  REQUIRE(label.sign_b[0] == +1);
  // Second sector: |j| = 1 and the dead-zone sign.
  REQUIRE(label.abs_j[1] == Approx(1.0).margin(1e-12));
  REQUIRE(label.sign_b[1] == 0);
}

TEST_CASE("proportionally scaled pulses share a label") {
  Rng rng(65);
  for (int k = 0; k < 40; ++k) {
    const Axis axis = static_cast<Axis>(1 + k % 3);
    ModelParams p = random_params(rng, axis);
    ModelParams q = p;
    const double lambda = rng.uniform(0.2, 2.5);
    q.coupling *= lambda;
    q.field1 *= lambda;
    q.field2 *= lambda;
    REQUIRE(labels_match(subgroup_label(PulseSpec{p, 1.0}),
                         subgroup_label(PulseSpec{q, 0.7})));
  }
}

TEST_CASE("labels are indeterminate when the rotation angle is a pi multiple") {
  // b = 0 sector rotating by exactly pi.
  ModelParams p;
  p.coupling = Vec3(0.0, 0.0, 0.0);
  p.field1 = 0.5;
  p.field2 = 0.5;
  p.axis = Axis::Z;  // R_+ = 1, R_- = 0
  const Mat4 u = evolve_closed(p, M_PI).mat;
  REQUIRE_THROWS_AS(subgroup_label(u, Axis::Z), IndeterminateLabel);
}

TEST_CASE("adjoint is the matrix inverse") {
  Rng rng(66);
  const PulseSpec p = random_pulse(rng, Axis::Y);
  const Mat4 u = evolve(p).mat;
  REQUIRE((u * u.adjoint() - Mat4::Identity()).norm() < 1e-12);
}

TEST_CASE("tunable inverse prescription cancels random pulses") {
  Rng rng(67);
  int feasible = 0;
  double worst = 0.0;
  for (int k = 0; k < 120; ++k) {
    const Axis axis = static_cast<Axis>(1 + k % 3);
    const PulseSpec p = random_pulse(rng, axis, 3.0, 2.0);
    const auto res = find_inverse(p, InversePolicy::TuneAll, 16);
    if (!std::holds_alternative<PulseSpec>(res)) continue;
    ++feasible;
    const PulseSpec& inv = std::get<PulseSpec>(res);
    REQUIRE(inv.duration >= 0.0);
    const Mat4 round_trip = evolve(inv).mat * evolve(p).mat;
    worst = std::max(worst,
                     (round_trip - Mat4::Identity()).norm());
  }
  REQUIRE(feasible == 120);
  REQUIRE(worst < 1e-10);
}

TEST_CASE("explicit inverse branches respect their integer constraints") {
  Rng rng(68);
  const PulseSpec p = random_pulse(rng, Axis::Z, 2.0, 1.0);
  InverseBranch branch;
  branch.S = {+1, +1};
  const ReducedParams red = reduce(p.params);
  branch.m[0] = static_cast<int>(std::ceil(red.R_plus * p.duration / M_PI));
  branch.m[1] = static_cast<int>(std::ceil(red.R_minus * p.duration / M_PI));
  if ((branch.m[0] + branch.m[1]) % 2 != 0) branch.m[1] += 1;
  branch.n[0] = -(branch.m[0] + branch.m[1]) / 2;
  branch.n[1] = 0;
  const auto res = inverse_for_branch(p, branch);
  REQUIRE(std::holds_alternative<PulseSpec>(res));
  const Mat4 round_trip =
      evolve(std::get<PulseSpec>(res)).mat * evolve(p).mat;
  REQUIRE((round_trip - Mat4::Identity()).norm() < 1e-10);

  // Breaking the phase parity is reported, not silently fixed.
  InverseBranch bad = branch;
  bad.n[1] = 1;
  REQUIRE(std::holds_alternative<Infeasible>(inverse_for_branch(p, bad)));
}

TEST_CASE("diagonal pulses invert by phase conjugation") {
  // Isotropic couplings with zero field evolve diagonally.
  ModelParams p;
  p.coupling = Vec3(1.0, 1.0, 1.0);
  p.axis = Axis::Z;
  const PulseSpec pulse{p, 0.4};
  const auto res = find_inverse(pulse, InversePolicy::TuneAll, 16);
  REQUIRE(std::holds_alternative<PulseSpec>(res));
  const Mat4 round_trip =
      evolve(std::get<PulseSpec>(res)).mat * evolve(pulse).mat;
  REQUIRE((round_trip - Mat4::Identity()).norm() < 1e-10);
}

TEST_CASE("same-Hamiltonian inversion works only on commensurate pulses") {
  ModelParams p;
  p.coupling = Vec3(0.0, 0.0, 1.0);
  p.axis = Axis::Z;
  const PulseSpec pulse{p, 1.0};
  const auto res = find_inverse(pulse, InversePolicy::SameHamiltonian, 8);
  REQUIRE(std::holds_alternative<PulseSpec>(res));
  const PulseSpec& inv = std::get<PulseSpec>(res);
  REQUIRE(inv.duration == Approx(2.0 * M_PI - 1.0).margin(1e-12));
  const Mat4 round_trip = evolve(inv).mat * evolve(pulse).mat;
  REQUIRE((round_trip - Mat4::Identity()).norm() < 1e-10);

  // Generic parameters have incommensurate frequencies.
  Rng rng(69);
  const PulseSpec generic = random_pulse(rng, Axis::Z);
  const auto res2 = find_inverse(generic, InversePolicy::SameHamiltonian, 8);
  REQUIRE(std::holds_alternative<Infeasible>(res2));
  REQUIRE_FALSE(std::get<Infeasible>(res2).reason.empty());
}

TEST_CASE("a pulse composed with itself closes with doubled angles") {
  Rng rng(70);
  const PulseSpec p = random_pulse(rng, Axis::X, 2.0, 1.5);
  const auto res = product_closure_check(p, p);
  REQUIRE(std::holds_alternative<ClosurePrescription>(res));
  const auto& pres = std::get<ClosurePrescription>(res);
  const Mat4 direct = evolve(p).mat * evolve(p).mat;
  REQUIRE((pres.predicted - direct).norm() < 1e-10);
  REQUIRE((evolve(pres.realized).mat - direct).norm() < 1e-10);
  const ReducedParams red = reduce(p.params);
  // Unwrapped, the first sector angle doubles.
  const double doubled = 2.0 * red.R_plus * p.duration;
  const double canonical = pres.axis_flip[0] ? -pres.delta_minus_out[0]
                                             : pres.delta_minus_out[0];
  REQUIRE(std::remainder(doubled - canonical - 2.0 * M_PI * pres.r_prime[0],
                         2.0 * M_PI) == Approx(0.0).margin(1e-9));
}

TEST_CASE("proportional scaling closes, broken ratios do not") {
  Rng rng(71);
  for (int k = 0; k < 30; ++k) {
    const Axis axis = static_cast<Axis>(1 + k % 3);
    ModelParams p1 = random_params(rng, axis);
    ModelParams p2 = p1;
    const double lambda = rng.uniform(0.3, 2.0);
    p2.coupling *= lambda;
    p2.field1 *= lambda;
    p2.field2 *= lambda;
    const PulseSpec a{p1, rng.uniform(0.1, 2.0)};
    const PulseSpec b{p2, rng.uniform(0.1, 2.0)};
    const auto res = product_closure_check(a, b);
    REQUIRE(std::holds_alternative<ClosurePrescription>(res));
    const Mat4 direct = evolve(b).mat * evolve(a).mat;
    REQUIRE((std::get<ClosurePrescription>(res).predicted - direct).norm() <
            1e-10);

    ModelParams broken = p2;
    broken.field1 += 1.7;  // breaks the field-to-pair ratio
    const auto res2 = product_closure_check(a, PulseSpec{broken, b.duration});
    REQUIRE(std::holds_alternative<NotClosed>(res2));
  }
}

TEST_CASE("broken ratios produce non-parallel sector axes") {
  // The composition of two sectors with different axes leaves the
  // one-axis family: the cross term does not vanish.
  Rng rng(72);
  const ModelParams p1 = random_params(rng, Axis::Z);
  ModelParams p2 = p1;
  p2.field1 += 2.0;
  const EvolutionOp u1 = evolve_closed(p1, 0.9);
  const EvolutionOp u2 = evolve_closed(p2, 1.1);
  const Vec3 n1 = u1.sectors[0].bloch;
  const Vec3 n2 = u2.sectors[0].bloch;
  REQUIRE(n1.cross(n2).norm() > 1e-3);
}

TEST_CASE("sector composition matches the direct product") {
  Rng rng(73);
  double worst = 0.0;
  for (int k = 0; k < 3000; ++k) {
    const Sector s1 = sector_from_exponential(
        rng.uniform(-M_PI, M_PI), rng.uniform(0.0, 2.0 * M_PI),
        rng.unit_vec3());
    const Sector s2 = sector_from_exponential(
        rng.uniform(-M_PI, M_PI), rng.uniform(0.0, 2.0 * M_PI),
        rng.unit_vec3());
    const Sector comp = compose_bch(s1, s2);
    worst = std::max(worst, (comp.mat - Mat2(s1.mat * s2.mat)).norm());
  }
  REQUIRE(worst < 1e-12);
}

TEST_CASE("parallel axes add their rotation angles") {
  const Vec3 n(0.6, 0.0, 0.8);
  const Sector s1 = sector_from_exponential(0.2, 0.7, n);
  const Sector s2 = sector_from_exponential(-0.1, 1.1, n);
  const Sector comp = compose_bch(s1, s2);
  REQUIRE(comp.phases.delta_minus == Approx(1.8).margin(1e-12));
  REQUIRE((comp.bloch - n).norm() < 1e-12);
  REQUIRE(comp.phases.delta_plus == Approx(0.1).margin(1e-12));
}

TEST_CASE("perpendicular quarter turns compose into the cross axis") {
  const Vec3 n1 = Vec3::UnitZ();
  const Vec3 n2 = Vec3::UnitX();
  const Sector s1 = sector_from_exponential(0.0, 0.5 * M_PI, n1);
  const Sector s2 = sector_from_exponential(0.0, 0.5 * M_PI, n2);
  const Sector comp = compose_bch(s1, s2);
  REQUIRE(std::cos(comp.phases.delta_minus) == Approx(0.0).margin(1e-12));
  REQUIRE((comp.bloch - n1.cross(n2)).norm() < 1e-12);
}

TEST_CASE("sector composition requires matching rows") {
  Sector s1 = sector_from_exponential(0.0, 1.0, Vec3::UnitZ());
  Sector s2 = s1;
  s2.row_k = 2;
  s2.row_l = 3;
  REQUIRE_THROWS_AS(compose_bch(s1, s2), RowMismatch);
}

TEST_CASE("commutation criterion") {
  Rng rng(74);
  const ModelParams p = random_params(rng, Axis::Y);
  // Same parameters, different durations.
  REQUIRE(commutes(PulseSpec{p, 0.5}, PulseSpec{p, 2.0}));
  // Proportional scaling.
  ModelParams q = p;
  q.coupling *= 1.7;
  q.field1 *= 1.7;
  q.field2 *= 1.7;
  REQUIRE(commutes(PulseSpec{p, 0.5}, PulseSpec{q, 1.0}));
  const Mat4 u1 = evolve_closed(p, 0.5).mat;
  const Mat4 u2 = evolve_closed(q, 1.0).mat;
  REQUIRE((u1 * u2 - u2 * u1).norm() < 1e-10);

  ModelParams broken = q;
  broken.field1 += 1.3;
  REQUIRE_FALSE(commutes(PulseSpec{p, 0.5}, PulseSpec{broken, 1.0}));
  const Mat4 u3 = evolve_closed(broken, 1.0).mat;
  REQUIRE((u1 * u3 - u3 * u1).norm() > 1e-6);

  ModelParams other_axis = q;
  other_axis.axis = Axis::X;
  REQUIRE_THROWS_AS(commutes(PulseSpec{p, 1.0}, PulseSpec{other_axis, 1.0}),
                    InvalidInput);
}

TEST_CASE("classification of the special families") {
  // Global phase.
  const Mat4 gp = std::polar(1.0, 0.9) * Mat4::Identity();
  const Classification c1 = classify_special(gp, Axis::X);
  REQUIRE(c1.primary == SpecialClass::GlobalPhase);
  REQUIRE(c1.diagonal_family);
  REQUIRE(c1.phase == Approx(0.9).margin(1e-12));

  // Diagonal family with opposite sector phases.
  const Mat4 d = diagonal_family_element(Axis::X, 0.7, +1, +1);
  const Classification c2 = classify_special(d, Axis::X);
  REQUIRE(c2.primary == SpecialClass::DiagonalFamily);
  REQUIRE_FALSE(c2.global_phase);

  // A sector-phase-free rotation (axial coupling zero).
  const PulseSpec free_pulse = pulse_from_sector_target(
      Axis::Z, -1, Vec3(0.6, 0.0, 0.8), 1.1, 0.0, 1.0);
  const Classification c3 = classify_special(evolve(free_pulse));
  REQUIRE(c3.primary == SpecialClass::SectorPhaseOnly);

  // Generic evolution.
  Rng rng(75);
  ModelParams p = random_params(rng, Axis::Y);
  p.coupling[1] = 1.3;  // nonzero axial coupling
  const Classification c4 = classify_special(evolve_closed(p, 0.77));
  REQUIRE(c4.primary == SpecialClass::Generic);
}

TEST_CASE("diagonal-family elements commute with pulse products") {
  Rng rng(76);
  for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
    const NormalityReport rep = normality_witness(axis, 40, rng);
    REQUIRE(rep.max_commutator < 1e-10);
    REQUIRE(rep.max_conjugation_defect < 1e-10);
  }
}

TEST_CASE("labeled families satisfy the group axioms numerically") {
  Rng rng(77);
  for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
    const auto [u_dir, w_dir] = bloch_plane(axis);
    for (int k = 0; k < 25; ++k) {
      const double phi_a = rng.uniform(0.0, 2.0 * M_PI);
      const double phi_b = rng.uniform(0.0, 2.0 * M_PI);
      const Vec3 na = std::cos(phi_a) * u_dir + std::sin(phi_a) * w_dir;
      const Vec3 nb = std::cos(phi_b) * u_dir + std::sin(phi_b) * w_dir;
      const auto member = [&](double t1, double t2, double ax) {
        return pulse_from_sector_axes(axis, na, t1, nb, t2, ax, 1.0);
      };
      const PulseSpec g1 = member(rng.uniform(0.1, 3.0), rng.uniform(0.1, 3.0),
                                  rng.uniform(-1.0, 1.0));
      const PulseSpec g2 = member(rng.uniform(0.1, 3.0), rng.uniform(0.1, 3.0),
                                  rng.uniform(-1.0, 1.0));

      // Closure: the product is again a single-pulse-form element with the
      // same label.
      const auto closed = product_closure_check(g1, g2);
      REQUIRE(std::holds_alternative<ClosurePrescription>(closed));
      const auto& pres = std::get<ClosurePrescription>(closed);
      const Mat4 product = evolve(g2).mat * evolve(g1).mat;
      REQUIRE((pres.predicted - product).norm() < 1e-10);

      // Label extraction on the product returns the family label whenever
      // the product angles leave the axes observable.
      bool observable = true;
      for (const Sector& s : extract_sectors(product, axis, 1e-10))
        observable = observable && s.axis_observable;
      if (observable)
        REQUIRE(labels_match(subgroup_label(product, axis),
                             subgroup_label(g1)));

      // Abelian within the label.
      const Mat4 ab = evolve(g1).mat * evolve(g2).mat;
      REQUIRE((ab - product).norm() < 1e-10);

      // Identity and inverse stay in the family.
      REQUIRE((evolve_closed(g1.params, 0.0).mat - Mat4::Identity()).norm() ==
              0.0);
      const auto inv = find_inverse(g1, InversePolicy::TuneAll, 16);
      REQUIRE(std::holds_alternative<PulseSpec>(inv));
      const Mat4 cancel = evolve(std::get<PulseSpec>(inv)).mat * evolve(g1).mat;
      REQUIRE((cancel - Mat4::Identity()).norm() < 1e-10);
    }
  }
}

TEST_CASE("conjugation by the axis rotation transports the z family to x") {
  Rng rng(78);
  const Mat4 r = bipartite_rotation_bell(angles_z_to(Axis::X));
  for (int k = 0; k < 25; ++k) {
    const ModelParams pz = random_params(rng, Axis::Z);
    const double t = rng.uniform(0.0, 5.0);
    const EvolutionOp uz = evolve_closed(pz, t);
    const Mat4 ux = r * uz.mat * r.adjoint();
    REQUIRE(in_S_h(ux, Axis::X, 1e-10));
    // Canonical angle read-outs agree sector by sector (matched by label).
    const auto sectors_z = extract_sectors(uz.mat, Axis::Z, 1e-10);
    const auto sectors_x = extract_sectors(ux, Axis::X, 1e-10);
    for (const Sector& sz : sectors_z)
      for (const Sector& sx : sectors_x)
        if (sz.mu == sx.mu) {
          REQUIRE(sz.phases.delta_minus ==
                  Approx(sx.phases.delta_minus).margin(1e-10));
          REQUIRE(sz.phases.delta_plus ==
                  Approx(sx.phases.delta_plus).margin(1e-10));
        }
  }
}
