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
#include "bellsector/types.hpp"

namespace bellsector {

/// H in the computational basis |00>,|01>,|10>,|11>.  Hermitian, traceless.
Mat4 hamiltonian_matrix(const ModelParams& params);

/// H conjugated into the Bell basis, where it is block 2x2.
Mat4 bell_hamiltonian(const ModelParams& params);

// One of the two 2x2 blocks of the Bell-basis Hamiltonian.  The block
// hosting energy label mu occupies rows/columns (row_k, row_l) of the 4x4
// and reads mu*J_axis*I + rabi * (bloch . sigma) in that 2d subspace, with
// rabi = R_{-mu} and |bloch| = 1.  The same axis drives the propagator
// sector: exp(-iHt) restricted to the block is
// exp(-i mu J t) (cos(rabi t) I - i sin(rabi t) bloch . sigma).
struct BellBlock {
  int row_k = 0;
  int row_l = 1;
  int mu = -1;
  double rabi = 0.0;
  Vec3 bloch = Vec3::UnitZ();
};

BellBlock bell_block(const ModelParams& params, int mu);

/// Energies indexed by label (mu, nu) in the order (--, -+, +-, ++):
/// E(mu, nu) = mu*J_axis + nu*R_{-mu}.  Their sum is zero.
struct EnergyLevels {
  std::array<double, 4> values{};
  double at(int mu, int nu) const { return values[bell_index(mu, nu)]; }
};

EnergyLevels closed_form_levels(const ModelParams& params);

struct EigenPair {
  double value = 0.0;
  BellVector vector = BellVector::Zero();
  int mu = -1;
  int nu = -1;
  // True when the level lies in a rabi = 0 block, where any basis of the
  // 2d subspace is an eigenbasis and only projectors are comparable.
  bool degenerate_pair = false;
};

struct EigenSystem {
  std::array<EigenPair, 4> pairs{};  // label order (--, -+, +-, ++)
  EnergyLevels levels() const;
};

/// Closed-form eigenvectors in the Bell basis, phase-fixed so the first
/// amplitude of significant size is real positive.
EigenSystem closed_form_vectors(const ModelParams& params);

/// Applies the canonical phase convention in place and returns the vector.
BellVector canonical_phase(BellVector v);

// Ground-truth eigensolver: cyclic Jacobi rotations on a 4x4 Hermitian
// matrix.  Deliberately shares no code with the closed forms.
struct OracleEigenSystem {
  std::array<double, 4> values{};  // ascending
  Mat4 vectors = Mat4::Identity();  // columns, orthonormal
  double off_diagonal_residual = 0.0;
};

/// Throws NotHermitian when ||H - H^dag|| exceeds 1e-12 * max(1, ||H||).
OracleEigenSystem oracle_diagonalize(const Mat4& hermitian);

}  // namespace bellsector
