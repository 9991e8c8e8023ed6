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

#include "bellsector/model.hpp"
#include "bellsector/spectral.hpp"
#include "bellsector/types.hpp"

namespace bellsector {

// Phase data of one sector.  delta_plus is the U(1) phase pulled out of
// the 2x2 block, delta_minus the Bloch rotation half-angle, so that
// mat = exp(i delta_plus) (cos(delta_minus) I - i sin(delta_minus) n.sigma).
// For a pulse of duration t the physical propagator has
// delta_plus = -mu J_axis t and delta_minus = R_{-mu} t.
struct PhasePair {
  double delta_plus = 0.0;
  double delta_minus = 0.0;
};

// One 2x2 unitary block of a Bell-basis evolution operator, coupling the
// Bell pair at rows (row_k, row_l) of the 4x4.
struct Sector {
  Mat2 mat = Mat2::Identity();
  int row_k = 0;
  int row_l = 1;
  // Hosted energy label: the block carries the levels mu*J_axis +- R_{-mu}.
  // Zero for sectors built without reference to a pulse.
  int mu = 0;
  // Structural signs of the sector layout, fixed per axis and position.
  int sign_beta = 1;
  int sign_q = 1;
  PhasePair phases;
  Vec3 bloch = Vec3::UnitZ();
  // False when delta_minus is a multiple of pi and the axis is unobservable
  // from the matrix alone (bloch then holds the +z placeholder).
  bool axis_observable = true;
};

/// Builds exp(i delta_plus) (cos(delta_minus) I - i sin(delta_minus) n.sigma)
/// on rows (0,1).  Throws NonUnitAxis unless |n| = 1 to 1e-9.
Sector sector_from_exponential(double delta_plus, double delta_minus,
                               const Vec3& n);

struct EvolutionOp {
  Mat4 mat = Mat4::Identity();
  Axis axis = Axis::Z;
  double time = 0.0;
  std::array<Sector, 2> sectors;  // ordered by first row index
};

/// Row pairs (k,l) of the two sectors for axis h, ordered so the first
/// sector contains row 0.
std::array<std::array<int, 2>, 2> sector_rows(Axis h);

/// Hosted energy label of sector j (0 or 1) for axis h.
int sector_host_label(Axis h, int j);

// Physical propagator U(t) = exp(-iHt) in the Bell basis, assembled per
// sector from the closed form.  Entries outside the sector pattern are
// exact zeros.
EvolutionOp evolve_closed(const ModelParams& params, double t);

/// Ground-truth propagator: sum_k exp(-i E_k t) |v_k><v_k| over the Jacobi
/// eigensystem of the Bell-basis Hamiltonian.
Mat4 evolve_oracle(const ModelParams& params, double t);

// Closed form transcribed entry by entry from the sector sign structure,
// whose natural phase orientation is exp(+iHt).  Related to the physical
// propagator by a single time reflection:
//   sector_form_matrix(p, t) == evolve_closed(p, kSectorFormTimeSign * t).mat
// The orientation was pinned once against the diagonalization oracle.
Mat4 sector_form_matrix(const ModelParams& params, double t);
inline constexpr double kSectorFormTimeSign = -1.0;

/// Splits a Bell-basis matrix into its two sectors for axis h.  Throws
/// StructureViolation if any entry outside the sector pattern exceeds tol.
std::array<Sector, 2> extract_sectors(const Mat4& u, Axis h,
                                      double tol = 1e-12);
std::array<Sector, 2> extract_sectors(const EvolutionOp& u,
                                      double tol = 1e-12);

/// The Bell partner (mu', nu') that U_h couples to beta_{mu nu}:
/// h = x flips nu, h = y flips both, h = z flips mu.
std::array<int, 2> pair_mapping(Axis h, int mu, int nu);

/// (b_{-alpha}, j_{-alpha}) as they enter the closed forms for the sector
/// hosting label alpha, including the y-axis pair orientation.
std::array<double, 2> sector_bj(const ModelParams& params, int alpha);

}  // namespace bellsector
