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

#include "bellsector/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bellsector/errors.hpp"

namespace bellsector {

namespace {

Mat2 axis_rotation(double angle, const Vec3& n) {
  return std::cos(angle) * Mat2::Identity() -
         kImag * std::sin(angle) * dot_sigma(n);
}

PulseSpec realize_sector_pulse(Axis h, int mu, const Vec3& n, double angle,
                               double axial = 0.0) {
  // Unit Rabi frequency, so the duration equals the rotation angle.
  if (angle <= 1e-15)
    return pulse_from_sector_target(h, mu, bloch_plane(h)[0], 0.0, axial, 1.0);
  return pulse_from_sector_target(h, mu, n, angle, axial, angle);
}

}  // namespace

Mat2 euler_rotation(const RotationParams& r) {
  const double cb = std::cos(0.5 * r.beta);
  const double sb = std::sin(0.5 * r.beta);
  Mat2 m;
  m(0, 0) = std::polar(cb, -0.5 * (r.alpha + r.gamma));
  m(0, 1) = -std::polar(sb, 0.5 * (r.alpha - r.gamma));
  m(1, 0) = std::polar(sb, -0.5 * (r.alpha - r.gamma));
  m(1, 1) = std::polar(cb, 0.5 * (r.alpha + r.gamma));
  return m;
}

Mat4 bipartite_rotation(const RotationParams& r) {
  const Mat2 single = euler_rotation(r);
  return kron(single, single);
}

Mat4 bipartite_rotation_bell(const RotationParams& r) {
  return to_bell_basis(bipartite_rotation(r));
}

RotationParams angles_z_to(Axis target) {
  switch (target) {
    case Axis::X: return {0.5 * M_PI, 0.5 * M_PI, 0.0};
    case Axis::Y: return {-M_PI, 0.5 * M_PI, 0.5 * M_PI};
    case Axis::Z: return {0.0, 0.0, 0.0};
  }
  throw InvalidInput("axis out of range");
}

ModelParams rotated_params(const ModelParams& z_params, Axis target) {
  if (z_params.axis != Axis::Z)
    throw InvalidInput("rotated_params expects z-axis parameters");
  ModelParams p = z_params;
  p.axis = target;
  const Vec3& j = z_params.coupling;
  switch (target) {
    case Axis::Z: break;
    case Axis::X: p.coupling = Vec3(j[2], j[0], j[1]); break;
    case Axis::Y: p.coupling = Vec3(j[1], j[2], j[0]); break;
  }
  return p;
}

LoopSearchResult find_evolution_loop(const ModelParams& params, double horizon,
                                     double tol) {
  const ReducedParams red = reduce(params);
  LoopSearchResult result;

  const double base =
      std::max({red.R_plus, red.R_minus, std::abs(red.J_axis)});
  if (base == 0.0) {
    // H = 0: the propagator never leaves the identity.
    result.exact_found = true;
    result.exact.push_back({0.0, 0.0, +1});
    return result;
  }
  if (horizon <= 0.0) horizon = 1e3 / base;

  // Cap the scan so a huge horizon cannot stall a caller.
  const double raw_steps = std::floor(horizon * base / M_PI);
  const int steps = static_cast<int>(std::min(raw_steps, 1e6));
  for (int k = 1; k <= steps; ++k) {
    const double t = k * M_PI / base;
    const Mat4 u = evolve_closed(params, t).mat;
    const double plus = (u - Mat4::Identity()).norm();
    const double minus = (u + Mat4::Identity()).norm();
    LoopCandidate cand;
    cand.time = t;
    cand.sign = (plus <= minus) ? +1 : -1;
    cand.residual = std::min(plus, minus);
    if (cand.residual < tol) {
      result.exact.push_back(cand);
    } else {
      result.approximants.push_back(cand);
    }
  }
  result.exact_found = !result.exact.empty();
  std::sort(result.approximants.begin(), result.approximants.end(),
            [](const LoopCandidate& a, const LoopCandidate& b) {
              return a.residual / a.time < b.residual / b.time;
            });
  if (result.approximants.size() > 8) result.approximants.resize(8);
  return result;
}

std::variant<PulseSpec, ExchangeInfeasible> find_exchange(
    const ModelParams& templ, double horizon) {
  const ReducedParams red = reduce(templ);
  double ceiling = 0.0;
  for (int j = 0; j < 2; ++j) {
    const int alpha = sector_host_label(templ.axis, j);
    const auto [b, jj] = sector_bj(templ, alpha);
    ceiling = std::max(ceiling, std::abs(b));
    const double pair = (alpha < 0) ? red.Jpair_minus : red.Jpair_plus;
    const double rabi = (alpha < 0) ? red.R_plus : red.R_minus;
    if (std::abs(pair) <= 1e-12 * std::max(1.0, rabi) && rabi > 0.0) {
      const double t = 0.5 * M_PI / rabi;
      if (horizon > 0.0 && t > horizon) {
        std::ostringstream reason;
        reason << "shortest exchange time " << t << " exceeds horizon "
               << horizon;
        return ExchangeInfeasible{ceiling, reason.str()};
      }
      return PulseSpec{templ, t};
    }
  }
  std::ostringstream reason;
  reason << "no sector has a vanishing pair coupling; the antidiagonal "
            "magnitude is capped at |b| = "
         << ceiling;
  return ExchangeInfeasible{ceiling, reason.str()};
}

SynthesisTarget target_from_axis_angle(Axis h, const Vec3& n, double angle,
                                       int sector_index, double tolerance) {
  if (std::abs(n.norm() - 1.0) > 1e-9)
    throw NonUnitAxis("target axis must be a unit vector");
  SynthesisTarget t;
  t.unitary = axis_rotation(angle, n);
  t.axis = h;
  t.sector_index = sector_index;
  t.tolerance = tolerance;
  return t;
}

TwoPulseSolution synthesize_two_pulse(const SynthesisTarget& target) {
  if (unitarity_defect(target.unitary) > 1e-9)
    throw InvalidInput("synthesis target must be unitary");

  const Axis h = target.axis;
  const int mu = sector_host_label(h, target.sector_index);
  const auto [u_dir, w_dir] = bloch_plane(h);
  const Vec3 v_dir = bloch_plane_normal(h);

  TwoPulseSolution sol;

  // Split off the U(2) phase.
  const Complex det = target.unitary.determinant();
  sol.removed_phase = 0.5 * std::arg(det);
  const Mat2 w_target = std::polar(1.0, -sol.removed_phase) * target.unitary;

  // Axis-angle read-out of the SU(2) target.
  const double cos_t = std::clamp(0.5 * w_target.trace().real(), -1.0, 1.0);
  Vec3 vec;
  for (int k = 1; k <= 3; ++k)
    vec[k - 1] = -0.5 * (w_target * pauli(k)).trace().imag();
  const double sin_t = vec.norm();
  const double angle_t = std::atan2(sin_t, cos_t);

  const auto finish = [&](const Vec3& n_second, double theta_second,
                          const Vec3& n_first, double theta_first) {
    sol.pulses[0] = realize_sector_pulse(h, mu, n_first, theta_first);
    sol.pulses[1] = realize_sector_pulse(h, mu, n_second, theta_second);
    const Mat2 achieved =
        axis_rotation(theta_second, n_second) * axis_rotation(theta_first, n_first);
    sol.achieved = achieved;
    sol.companion = Mat2::Identity();
    sol.residual = (achieved - w_target).norm();
    if (sol.residual > target.tolerance) {
      std::ostringstream what;
      what << "two-pulse residual " << sol.residual
           << " exceeds the requested tolerance " << target.tolerance;
      throw SolverFailure(what.str());
    }
    return sol;
  };

  if (sin_t <= 1e-14) {
    // Target is +-identity; realize it inside a single axis family.
    sol.frame_n = u_dir;
    sol.frame_n_perp = w_dir;
    sol.frame_n_tilde = v_dir;
    if (cos_t > 0.0)
      return finish(u_dir, 1.5 * M_PI, u_dir, 0.5 * M_PI);  // full turn
    return finish(u_dir, 0.0, u_dir, M_PI);
  }

  const Vec3 n_target = vec / sin_t;
  const double out_comp = n_target.dot(v_dir);

  if (std::abs(out_comp) <= 1e-12) {
    // Target axis already lies in the family plane: one pulse suffices and
    // the second stays idle.
    const Vec3 n = (n_target - out_comp * v_dir).normalized();
    sol.frame_n = n;
    sol.frame_n_perp = v_dir.cross(n);
    sol.frame_n_tilde = v_dir;
    sol.angle_alpha = 0.0;
    sol.angle_beta = 0.0;
    sol.angle_delta = 0.0;
    return finish(u_dir, 0.0, n, angle_t);
  }

  // General case: sweep the free in-plane direction of the second pulse's
  // axis and keep the fastest exact branch.
  struct Branch {
    double total = 0.0;
    Vec3 n, n_prime;
    double theta_second = 0.0, theta_first = 0.0;
    double alpha = 0.0, beta = 0.0, delta = 0.0;
    bool valid = false;
  };
  Branch best;

  for (int cand = 0; cand < 16; ++cand) {
    const double phi = cand * M_PI / 8.0;
    const Vec3 n = std::cos(phi) * u_dir + std::sin(phi) * w_dir;
    const double cos_a = std::clamp(n.dot(n_target), -1.0, 1.0);
    const double sin_a = std::sqrt(std::max(0.0, 1.0 - cos_a * cos_a));
    if (sin_a < 1e-9) continue;
    const Vec3 n_perp = v_dir.cross(n);
    const double beta = std::atan2(n_target.dot(v_dir), n_target.dot(n_perp));

    for (int k = 0; k < 2; ++k) {
      double theta2 = beta + k * M_PI;
      while (theta2 < 0.0) theta2 += 2.0 * M_PI;
      while (theta2 >= 2.0 * M_PI) theta2 -= 2.0 * M_PI;
      const double s = std::sin(theta2);
      const double c = std::cos(theta2);

      const double cp = s * sin_t * cos_a + c * cos_t;  // cos of first angle
      // sin(first) * sin(delta), taken from the better conditioned row.
      const double x = (std::abs(c) >= std::abs(s))
                           ? sin_t * sin_a * std::cos(beta) / c
                           : sin_t * sin_a * std::sin(beta) / s;
      const double y = c * sin_t * cos_a - s * cos_t;  // sin(first)*cos(delta)
      const double sp = std::hypot(x, y);

      Branch br;
      br.n = n;
      br.theta_second = theta2;
      br.alpha = std::atan2(sin_a, cos_a);
      br.beta = beta;
      if (sp <= 1e-12) {
        br.theta_first = (cp > 0.0) ? 0.0 : M_PI;
        br.n_prime = n;
        br.delta = 0.0;
      } else {
        br.delta = std::atan2(x, y);
        br.theta_first = std::atan2(sp, cp);
        br.n_prime = std::cos(br.delta) * n + std::sin(br.delta) * n_perp;
      }
      const Mat2 probe = axis_rotation(br.theta_second, br.n) *
                         axis_rotation(br.theta_first, br.n_prime);
      if ((probe - w_target).norm() > 0.5 * target.tolerance) continue;
      br.total = br.theta_first + br.theta_second;
      br.valid = true;
      if (!best.valid || br.total < best.total) best = br;
    }
  }

  if (!best.valid)
    throw SolverFailure(
        "no in-plane axis candidate reproduced the target; the frame "
        "equations admitted no branch at the requested tolerance");

  sol.frame_n = best.n;
  sol.frame_n_perp = v_dir.cross(best.n);
  sol.frame_n_tilde = (std::sin(best.delta) >= 0.0) ? v_dir : Vec3(-v_dir);
  sol.angle_alpha = best.alpha;
  sol.angle_beta = best.beta;
  sol.angle_delta = best.delta;
  return finish(best.n, best.theta_second, best.n_prime, best.theta_first);
}

CoverageReport coverage_experiment(Axis h, int samples, double tol, Rng& rng) {
  CoverageReport report;
  report.samples = samples;
  for (int s = 0; s < samples; ++s) {
    SynthesisTarget target;
    target.unitary = rng.haar_su2();
    target.axis = h;
    target.sector_index = 0;
    target.tolerance = tol;
    try {
      const TwoPulseSolution sol = synthesize_two_pulse(target);
      ++report.successes;
      report.max_residual = std::max(report.max_residual, sol.residual);
      int bin = static_cast<int>(
          std::floor((sol.angle_delta + M_PI) / (2.0 * M_PI) * 16.0));
      bin = std::clamp(bin, 0, 15);
      ++report.delta_histogram[bin];
    } catch (const SolverFailure&) {
      // counted as a failure
    }
  }
  return report;
}

}  // namespace bellsector
