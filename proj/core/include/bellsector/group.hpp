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

#pragma once

#include <array>
#include <string>
#include <variant>

#include "bellsector/evolution.hpp"
#include "bellsector/model.hpp"
#include "bellsector/rng.hpp"
#include "bellsector/types.hpp"

namespace bellsector {

/// One rectangular pulse: constant parameters applied for duration t >= 0.
struct PulseSpec {
  ModelParams params;
  double duration = 0.0;
};

inline EvolutionOp evolve(const PulseSpec& p) {
  return evolve_closed(p.params, p.duration);
}

// Label of the one-parameter subgroup a pulse generates: per sector, the
// magnitude of the j component and the sign of the b component of the
// Bloch axis, canonicalized so j >= 0.  sign_b = 0 marks |b| below the
// dead zone (|j| = 1), where the sign is meaningless.
struct GroupLabel {
  Axis axis = Axis::Z;
  std::array<double, 2> abs_j{1.0, 1.0};
  std::array<int, 2> sign_b{0, 0};
};

bool labels_match(const GroupLabel& a, const GroupLabel& b, double tol = 1e-9);

GroupLabel subgroup_label(const PulseSpec& pulse);
/// From a matrix; throws IndeterminateLabel when a sector's rotation angle
/// is a multiple of pi (axis unobservable).
GroupLabel subgroup_label(const Mat4& u, Axis h);

/// Membership in the block-sparse special-unitary family of axis h:
/// unitary, det 1, and no weight outside the sector pattern, all to tol.
bool in_S_h(const Mat4& u, Axis h, double tol = 1e-10);

struct Infeasible {
  std::string reason;
};

// Integer branch of the inverse prescription, indexed by sector position.
// The returned pulse p' satisfies, per sector,
//   (b', j') = S (b, j),
//   delta_minus' + S delta_minus = m pi,
//   delta_plus' + delta_plus = (2n + m) pi.
struct InverseBranch {
  std::array<int, 2> S{+1, +1};
  std::array<int, 2> n{0, 0};
  std::array<int, 2> m{0, 0};
};

// What may change between the pulse and its inverse.  TuneAll frees fields,
// couplings and duration; SameHamiltonian keeps every parameter and only
// searches the duration, which makes single-pulse inversion a
// commensurability question and generically infeasible.
enum class InversePolicy { TuneAll, SameHamiltonian };

std::variant<PulseSpec, Infeasible> inverse_for_branch(
    const PulseSpec& pulse, const InverseBranch& branch);

std::variant<PulseSpec, Infeasible> find_inverse(
    const PulseSpec& pulse, InversePolicy policy = InversePolicy::TuneAll,
    int window = 8);

struct NotClosed {
  std::string reason;
};

// Certificate that U(p2) U(p1) is again a single-pulse-form matrix, with
// the predicted sector angles.  delta_minus_out is reported in [0, pi]
// with axis_flip recording the compensating n -> -n; the integer windings
// (r, r_prime) close the angle identities exactly.
struct ClosurePrescription {
  std::array<int, 2> S{+1, +1};
  std::array<int, 2> r{0, 0};
  std::array<int, 2> r_prime{0, 0};
  std::array<double, 2> delta_plus_out{0.0, 0.0};
  std::array<double, 2> delta_minus_out{0.0, 0.0};
  std::array<bool, 2> axis_flip{false, false};
  Mat4 predicted = Mat4::Identity();
  PulseSpec realized;  // a pulse reproducing the product, duration 1
};

std::variant<ClosurePrescription, NotClosed> product_closure_check(
    const PulseSpec& p1, const PulseSpec& p2);

/// Composes two sectors on the same rows via the SU(2) product rule
/// (angles add on the cosine/axis side, axes combine with a cross term);
/// the result equals s1.mat * s2.mat, i.e. s2 applied first.  Throws
/// RowMismatch when the row pairs differ.
Sector compose_bch(const Sector& s1, const Sector& s2);

/// Sector-level commutation criterion: the pair coupling and field of p2
/// are proportional to those of p1 in both sectors (0/0 counts as
/// proportional).  Throws InvalidInput when the axes differ.
bool commutes(const PulseSpec& p1, const PulseSpec& p2, double tol = 1e-10);

enum class SpecialClass { GlobalPhase, DiagonalFamily, SectorPhaseOnly, Generic };

struct Classification {
  SpecialClass primary = SpecialClass::Generic;
  bool diagonal_family = false;   // both sectors are +-(phase) I
  bool global_phase = false;      // U = e^{i phi} I4
  bool sector_phase_free = false; // both sector determinants are 1
  double phase = 0.0;             // phi for the diagonal/global families
  std::array<int, 2> signs{+1, +1};
};

Classification classify_special(const Mat4& u, Axis h, double tol = 1e-10);
Classification classify_special(const EvolutionOp& u, double tol = 1e-10);

/// Builds the diagonal-family element with sector phases
/// (s1 e^{i phi}, s2 e^{-i phi}) on the sector row pairs of axis h.
Mat4 diagonal_family_element(Axis h, double phi, int s1, int s2);

struct NormalityReport {
  int samples = 0;
  double max_commutator = 0.0;
  double max_conjugation_defect = 0.0;
};

/// Numerical witness that diagonal-family elements commute with products
/// of pulses of the same axis.
NormalityReport normality_witness(Axis h, int samples, Rng& rng);

// Physical realization helpers shared by the group checks and the pulse
// solvers.

/// Pulse whose sector hosting label mu rotates by theta >= 0 about the
/// in-plane axis n, the companion sector being the identity; the coupling
/// along the field axis is `axial`.
PulseSpec pulse_from_sector_target(Axis h, int mu, const Vec3& n, double theta,
                                   double axial = 0.0, double duration = 1.0);

/// Pulse with both sectors prescribed (axes in the plane of axis h, angles
/// >= 0), ordered by sector position.
PulseSpec pulse_from_sector_axes(Axis h, const Vec3& n_first,
                                 double theta_first, const Vec3& n_second,
                                 double theta_second, double axial = 0.0,
                                 double duration = 1.0);

/// In-plane unit vectors (u, w) spanning the Bloch plane of axis h, with
/// u x w equal to the out-of-plane direction.
std::array<Vec3, 2> bloch_plane(Axis h);
Vec3 bloch_plane_normal(Axis h);

}  // namespace bellsector
