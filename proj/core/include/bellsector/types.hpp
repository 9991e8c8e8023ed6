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

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <string>

namespace bellsector {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4cd;

// A two-qubit pure state as amplitudes over the Bell basis, ordered
// (--, -+, +-, ++), i.e. (beta00, beta01, beta10, beta11).
using BellVector = Vec4;

inline constexpr Complex kImag{0.0, 1.0};

/// Direction of the magnetic field: 1,2,3 <-> x,y,z.
enum class Axis : int { X = 1, Y = 2, Z = 3 };

inline int axis_index(Axis h) { return static_cast<int>(h); }

std::string axis_name(Axis h);
Axis axis_from_name(const std::string& name);

/// Bell label (mu, nu) with mu, nu in {-1,+1}, packed into 0..3 in the
/// order (--, -+, +-, ++).
inline int bell_index(int mu, int nu) {
  return 2 * (mu > 0 ? 1 : 0) + (nu > 0 ? 1 : 0);
}
inline std::array<int, 2> bell_labels(int index) {
  return {index / 2 == 0 ? -1 : +1, index % 2 == 0 ? -1 : +1};
}
std::string bell_label_name(int mu, int nu);

const Mat2& pauli(int k);  // k = 1,2,3

inline Mat2 dot_sigma(const Vec3& n) {
  return n.x() * pauli(1) + n.y() * pauli(2) + n.z() * pauli(3);
}

inline double frobenius_distance(const Mat4& a, const Mat4& b) {
  return (a - b).norm();
}
inline double frobenius_distance(const Mat2& a, const Mat2& b) {
  return (a - b).norm();
}

inline double unitarity_defect(const Mat4& u) {
  return (u.adjoint() * u - Mat4::Identity()).norm();
}
inline double unitarity_defect(const Mat2& u) {
  return (u.adjoint() * u - Mat2::Identity()).norm();
}

/// Kronecker product of two single-qubit operators, first factor on the
/// left (most significant) qubit.
Mat4 kron(const Mat2& a, const Mat2& b);

}  // namespace bellsector
