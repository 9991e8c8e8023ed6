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
#include <variant>
#include <vector>

#include "bellsector/group.hpp"
#include "bellsector/model.hpp"
#include "bellsector/rng.hpp"
#include "bellsector/types.hpp"

namespace bellsector {

/// Euler angles, zyz convention.
struct RotationParams {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

/// Single-qubit rotation in the computational basis.
Mat2 euler_rotation(const RotationParams& r);

/// The same rotation applied to both qubits, R x R, computational basis.
Mat4 bipartite_rotation(const RotationParams& r);

/// R x R conjugated into the Bell basis.
Mat4 bipartite_rotation_bell(const RotationParams& r);

// The homogeneous rotations mapping the z-axis model onto the x- or
// y-axis one permute the couplings along; rotated_params applies the
// matching permutation so that
//   bipartite_rotation_bell(angles_z_to(h)) * U_z(t, p) * (dagger)
//     == U_h(t, rotated_params(p, h)).
ModelParams rotated_params(const ModelParams& z_params, Axis target);
RotationParams angles_z_to(Axis target);

struct LoopCandidate {
  double time = 0.0;
  double residual = 0.0;
  int sign = +1;  // +1: U(T) ~ +I, -1: U(T) ~ -I
};

struct LoopSearchResult {
  bool exact_found = false;
  std::vector<LoopCandidate> exact;
  std::vector<LoopCandidate> approximants;  // ranked by residual / time
};

/// Scans multiples of the fastest sector half-period up to `horizon`
/// (default 1e3 / max frequency) for times where the propagator returns to
/// +-identity within tol; always reports the best approximants found.
LoopSearchResult find_evolution_loop(const ModelParams& params,
                                     double horizon = 0.0, double tol = 1e-10);

struct ExchangeInfeasible {
  // Largest achievable antidiagonal magnitude, max over sectors of |b|.
  double ceiling = 0.0;
  std::string reason;
};

/// Shortest pulse whose sector is purely antidiagonal (swapping its Bell
/// pair up to phase).  Requires a sector with vanishing pair coupling;
/// otherwise reports the |b| ceiling.
std::variant<PulseSpec, ExchangeInfeasible> find_exchange(
    const ModelParams& templ, double horizon = 0.0);

struct SynthesisTarget {
  Mat2 unitary = Mat2::Identity();  // U(2); any overall phase is split off
  Axis axis = Axis::Z;
  int sector_index = 0;  // which sector position hosts the target
  double tolerance = 1e-8;
};

/// Convenience constructor from an axis-angle rotation exp(-i angle n.sigma).
SynthesisTarget target_from_axis_angle(Axis h, const Vec3& n, double angle,
                                       int sector_index = 0,
                                       double tolerance = 1e-8);

struct TwoPulseSolution {
  std::array<PulseSpec, 2> pulses;  // applied in order [0], then [1]
  double residual = 0.0;
  double removed_phase = 0.0;  // U(2) phase split off the target
  // Frame and angles used by the solver: n is the axis of the second
  // pulse, n' = cos(delta) n + sin(delta) n_perp that of the first.
  Vec3 frame_n = Vec3::UnitZ();
  Vec3 frame_n_perp = Vec3::UnitX();
  Vec3 frame_n_tilde = Vec3::UnitY();
  double angle_alpha = 0.0;
  double angle_beta = 0.0;
  double angle_delta = 0.0;
  Mat2 achieved = Mat2::Identity();   // realized target-side sector
  Mat2 companion = Mat2::Identity();  // simultaneous other sector
};

/// Realizes an arbitrary SU(2) element as the target sector of two pulses
/// about distinct in-plane axes.  Throws SolverFailure when no branch
/// meets the requested tolerance (which the coverage suite requires never
/// to happen).
TwoPulseSolution synthesize_two_pulse(const SynthesisTarget& target);

struct CoverageReport {
  int samples = 0;
  int successes = 0;
  double max_residual = 0.0;
  std::array<int, 16> delta_histogram{};  // over (-pi, pi]
};

CoverageReport coverage_experiment(Axis h, int samples, double tol, Rng& rng);

}  // namespace bellsector
