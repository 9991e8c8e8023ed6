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

#include <cmath>
#include <cstdint>
#include <random>

#include "bellsector/types.hpp"

namespace bellsector {

// Seeded generator with hand-rolled distributions so that a fixed seed
// gives identical streams on every platform (std:: distributions do not
// guarantee that).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller.
  double normal() {
    double u1 = uniform();
    while (u1 == 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  Complex complex_normal() { return {normal(), normal()}; }

  /// Haar-uniform element of SU(2) (unit quaternion on the 3-sphere).
  Mat2 haar_su2() {
    Eigen::Vector4d q;
    for (int i = 0; i < 4; ++i) q[i] = normal();
    q.normalize();
    Mat2 u = q[0] * Mat2::Identity();
    u += kImag * (q[1] * pauli(1) + q[2] * pauli(2) + q[3] * pauli(3));
    return u;
  }

  /// Unit vector uniform on the 2-sphere.
  Vec3 unit_vec3() {
    const double z = uniform(-1.0, 1.0);
    const double phi = uniform(0.0, 2.0 * M_PI);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {r * std::cos(phi), r * std::sin(phi), z};
  }

  Mat4 random_hermitian4() {
    Mat4 a;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) a(r, c) = complex_normal();
    return 0.5 * (a + Mat4(a.adjoint()));
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace bellsector
