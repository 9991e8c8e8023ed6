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

#include <string>

#include "bellsector/types.hpp"

namespace bellsector {

// Two spins coupled along all three axes, driven by a static field of
// strength B1 (first spin) and B2 (second spin) along a single axis h:
//
//   H = -sum_k J_k s1_k s2_k + B1 s1_h + B2 s2_h
//
// Energies are angular frequencies (hbar = 1); time is their reciprocal.
struct ModelParams {
  Vec3 coupling = Vec3::Zero();  // J = (J1, J2, J3)
  double field1 = 0.0;           // B1 along `axis`
  double field2 = 0.0;           // B2 along `axis`
  Axis axis = Axis::Z;
};

/// Throws InvalidInput if any entry is non-finite.
void validate(const ModelParams& params);

// Derived quantities used by every closed form.  The subscripts +/- refer
// to the internal combination: B_pm = B1 +- B2 and Jpair_pm = J_i +- J_j,
// with (i, j) the cyclic completion of the field axis.  R_pm pairs the
// field combination with the *opposite* coupling combination,
// R_pm = sqrt(B_pm^2 + Jpair_mp^2), and (b_pm, j_pm) are the cosine/sine
// split of that pair.  When R_pm = 0 the convention (b, j) = (0, 1) is
// used; the corresponding sector is then a pure phase and the choice is
// dynamically inert.
struct ReducedParams {
  double B_plus = 0.0;
  double B_minus = 0.0;
  double Jpair_plus = 0.0;
  double Jpair_minus = 0.0;
  double R_plus = 0.0;
  double R_minus = 0.0;
  double b_plus = 0.0;
  double b_minus = 0.0;
  double j_plus = 1.0;
  double j_minus = 1.0;
  double J_axis = 0.0;  // coupling component along the field axis
};

ReducedParams reduce(const ModelParams& params);

/// The two coupling axes (i, j) paired with field axis h, in cyclic order:
/// x -> (y, z), y -> (z, x), z -> (x, y).  1-based.
std::array<int, 2> cyclic_pair(Axis h);

/// Unitary change of basis: Bell amplitudes (--, -+, +-, ++) to
/// computational amplitudes (|00>, |01>, |10>, |11>).
Vec4 bell_to_computational(const BellVector& v);
BellVector computational_to_bell(const Vec4& amps);

/// The 4x4 change-of-basis matrix whose columns are the Bell states
/// expressed in the computational basis.
const Mat4& bell_basis_matrix();

/// Conjugates a computational-basis operator into the Bell basis.
Mat4 to_bell_basis(const Mat4& computational_op);

/// Parses {"J":[Jx,Jy,Jz],"B1":b1,"B2":b2,"axis":"x"|"y"|"z"}.  Keys and
/// the axis value are matched case-insensitively; missing or malformed
/// entries raise InvalidInput with a description.
ModelParams params_from_json(const std::string& text);
std::string params_to_json(const ModelParams& params);

}  // namespace bellsector
