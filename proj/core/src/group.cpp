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

#include "bellsector/group.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bellsector/errors.hpp"

namespace bellsector {

namespace {

constexpr double kLabelDeadZone = 1e-9;

// (b, j) of the sector hosting mu, read off a Bloch axis n through the
// same per-axis map that bell_block uses to place them.
std::array<double, 2> bj_from_bloch(Axis h, int mu, const Vec3& n) {
  switch (h) {
    case Axis::X:
      return mu < 0 ? std::array<double, 2>{n.x(), n.z()}
                    : std::array<double, 2>{-n.x(), -n.z()};
    case Axis::Y:
      return {-n.y(), -n.z()};
    case Axis::Z:
      return {n.x(), -n.z()};
  }
  throw InvalidInput("axis out of range");
}

// Canonical subgroup coordinates: representative with j >= 0; inside the
// dead zone j counts as zero and the representative takes b >= 0 instead,
// so labels do not jitter when j straddles zero numerically.  A b inside
// the dead zone has sign 0.
std::pair<double, int> canonical_label(double b, double j) {
  if (std::abs(j) <= kLabelDeadZone) {
    j = std::abs(j);
    b = std::abs(b);
  } else if (j < 0.0) {
    b = -b;
    j = -j;
  }
  const int sign_b = (std::abs(b) <= kLabelDeadZone) ? 0 : (b > 0 ? +1 : -1);
  return {std::abs(j), sign_b};
}

double wrap_pi(double angle) {
  // Into (-pi, pi].
  angle = std::remainder(angle, 2.0 * M_PI);
  if (angle <= -M_PI) angle += 2.0 * M_PI;
  return angle;
}

}  // namespace

std::array<Vec3, 2> bloch_plane(Axis h) {
  if (h == Axis::Y) return {Vec3::UnitY(), Vec3::UnitZ()};
  return {Vec3::UnitZ(), Vec3::UnitX()};
}

Vec3 bloch_plane_normal(Axis h) {
  const auto [u, w] = bloch_plane(h);
  return u.cross(w);
}

bool labels_match(const GroupLabel& a, const GroupLabel& b, double tol) {
  if (a.axis != b.axis) return false;
  for (int j = 0; j < 2; ++j) {
    if (std::abs(a.abs_j[j] - b.abs_j[j]) > tol) return false;
    if (a.sign_b[j] != b.sign_b[j]) return false;
  }
  return true;
}

GroupLabel subgroup_label(const PulseSpec& pulse) {
  GroupLabel label;
  label.axis = pulse.params.axis;
  for (int j = 0; j < 2; ++j) {
    const int alpha = sector_host_label(label.axis, j);
    const auto [b, jj] = sector_bj(pulse.params, alpha);
    const auto [abs_j, sign_b] = canonical_label(b, jj);
    label.abs_j[j] = abs_j;
    label.sign_b[j] = sign_b;
  }
  return label;
}

GroupLabel subgroup_label(const Mat4& u, Axis h) {
  const auto sectors = extract_sectors(u, h, 1e-10);
  GroupLabel label;
  label.axis = h;
  for (int j = 0; j < 2; ++j) {
    const Sector& s = sectors[j];
    if (!s.axis_observable)
      throw IndeterminateLabel(
          "sector rotation angle is a multiple of pi; its axis cannot be "
          "read off the matrix");
    const auto [b, jj] = bj_from_bloch(h, s.mu, s.bloch);
    const auto [abs_j, sign_b] = canonical_label(b, jj);
    label.abs_j[j] = abs_j;
    label.sign_b[j] = sign_b;
  }
  return label;
}

bool in_S_h(const Mat4& u, Axis h, double tol) {
  if (unitarity_defect(u) > tol) return false;
  if (std::abs(u.determinant() - Complex(1.0, 0.0)) > tol) return false;
  const auto rows = sector_rows(h);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      bool allowed = false;
      for (const auto& kl : rows) {
        const bool rin = (r == kl[0] || r == kl[1]);
        const bool cin = (c == kl[0] || c == kl[1]);
        if (rin && cin) { allowed = true; break; }
      }
      if (!allowed && std::abs(u(r, c)) > tol) return false;
    }
  }
  return true;
}

PulseSpec pulse_from_sector_axes(Axis h, const Vec3& n_first,
                                 double theta_first, const Vec3& n_second,
                                 double theta_second, double axial,
                                 double duration) {
  if (duration <= 0.0) throw InvalidInput("pulse duration must be positive");
  if (theta_first < 0.0 || theta_second < 0.0)
    throw InvalidInput("sector rotation angles must be nonnegative");
  const Vec3 normal = bloch_plane_normal(h);

  double b_of[2], j_of[2];
  const Vec3* axes[2] = {&n_first, &n_second};
  const double thetas[2] = {theta_first, theta_second};
  for (int j = 0; j < 2; ++j) {
    const Vec3& n = *axes[j];
    if (std::abs(n.norm() - 1.0) > 1e-9)
      throw NonUnitAxis("sector axis must be a unit vector");
    if (std::abs(n.dot(normal)) > 1e-9)
      throw InvalidInput("sector axis must lie in the Bloch plane of axis " +
                         axis_name(h));
    const int mu = sector_host_label(h, j);
    const auto bj = bj_from_bloch(h, mu, n);
    b_of[j] = bj[0];
    j_of[j] = bj[1];
  }

  // Sector hosting mu = -1 fixes (B_plus, Jpair_minus); mu = +1 fixes
  // (B_minus, Jpair_plus).
  double B_plus = 0.0, B_minus = 0.0, Jp_plus = 0.0, Jp_minus = 0.0;
  for (int j = 0; j < 2; ++j) {
    const int mu = sector_host_label(h, j);
    const double rabi = thetas[j] / duration;
    if (mu < 0) {
      B_plus = b_of[j] * rabi;
      double pair = j_of[j] * rabi;
      if (h == Axis::Y) pair = -pair;  // undo the closed-form orientation
      Jp_minus = pair;
    } else {
      B_minus = b_of[j] * rabi;
      Jp_plus = j_of[j] * rabi;
    }
  }

  ModelParams p;
  p.axis = h;
  const auto pair = cyclic_pair(h);
  p.coupling = Vec3::Zero();
  p.coupling[pair[0] - 1] = 0.5 * (Jp_plus + Jp_minus);
  p.coupling[pair[1] - 1] = 0.5 * (Jp_plus - Jp_minus);
  p.coupling[axis_index(h) - 1] = axial;
  p.field1 = 0.5 * (B_plus + B_minus);
  p.field2 = 0.5 * (B_plus - B_minus);
  return {p, duration};
}

PulseSpec pulse_from_sector_target(Axis h, int mu, const Vec3& n, double theta,
                                   double axial, double duration) {
  const Vec3 idle = bloch_plane(h)[0];
  if (sector_host_label(h, 0) == mu)
    return pulse_from_sector_axes(h, n, theta, idle, 0.0, axial, duration);
  return pulse_from_sector_axes(h, idle, 0.0, n, theta, axial, duration);
}

std::variant<PulseSpec, Infeasible> inverse_for_branch(
    const PulseSpec& pulse, const InverseBranch& branch) {
  const ModelParams& p = pulse.params;
  const ReducedParams red = reduce(p);
  const Axis h = p.axis;

  double theta_out[2];
  double phase_out[2];
  Vec3 axis_out[2];
  for (int j = 0; j < 2; ++j) {
    const int alpha = sector_host_label(h, j);
    const BellBlock blk = bell_block(p, alpha);
    const double dminus = blk.rabi * pulse.duration;
    const double dplus = -alpha * red.J_axis * pulse.duration;
    theta_out[j] = branch.m[j] * M_PI - branch.S[j] * dminus;
    phase_out[j] = (2 * branch.n[j] + branch.m[j]) * M_PI - dplus;
    if (theta_out[j] < -1e-12) {
      std::ostringstream reason;
      reason << "sector " << j << " rotation target is negative ("
             << theta_out[j] << "); choose a larger m";
      return Infeasible{reason.str()};
    }
    theta_out[j] = std::max(0.0, theta_out[j]);
    axis_out[j] = branch.S[j] < 0 ? Vec3(-blk.bloch) : blk.bloch;
  }
  if (std::abs(phase_out[0] + phase_out[1]) > 1e-9)
    return Infeasible{
        "sector phase targets are not antisymmetric: need "
        "2 n0 + m0 = -(2 n1 + m1)"};

  const double duration = 1.0;
  const int alpha0 = sector_host_label(h, 0);
  const double axial = -phase_out[0] / (alpha0 * duration);
  return pulse_from_sector_axes(h, axis_out[0], theta_out[0], axis_out[1],
                                theta_out[1], axial, duration);
}

std::variant<PulseSpec, Infeasible> find_inverse(const PulseSpec& pulse,
                                                 InversePolicy policy,
                                                 int window) {
  const ModelParams& p = pulse.params;
  const ReducedParams red = reduce(p);

  if (policy == InversePolicy::TuneAll) {
    InverseBranch branch;
    for (int j = 0; j < 2; ++j) {
      const int alpha = sector_host_label(p.axis, j);
      const double dminus =
          (alpha < 0 ? red.R_plus : red.R_minus) * pulse.duration;
      branch.S[j] = +1;
      branch.m[j] = static_cast<int>(std::ceil(dminus / M_PI - 1e-12));
    }
    if ((branch.m[0] + branch.m[1]) % 2 != 0) branch.m[1] += 1;
    if (std::abs(branch.m[0]) > window || std::abs(branch.m[1]) > window)
      return Infeasible{"required winding exceeds the search window"};
    branch.n[1] = 0;
    branch.n[0] = -(branch.m[0] + branch.m[1]) / 2;
    if (std::abs(branch.n[0]) > window)
      return Infeasible{"required phase winding exceeds the search window"};
    return inverse_for_branch(pulse, branch);
  }

  // SameHamiltonian: U(t') inverts U(t) iff U(t + t') = I, so search the
  // commensurate times of the three sector frequencies.
  const double freqs[3] = {red.R_plus, red.R_minus, std::abs(red.J_axis)};
  double base = 0.0;
  for (double f : freqs) base = std::max(base, f);
  if (base == 0.0) return PulseSpec{p, 0.0};  // H = 0: U = I already

  const Mat4 u = evolve_closed(p, pulse.duration).mat;
  for (int k = 1; k <= 4 * window; ++k) {
    const double total = k * M_PI / base;
    const double t_inv = total - pulse.duration;
    if (t_inv < 0.0) continue;
    const Mat4 w = evolve_closed(p, t_inv).mat;
    if ((w * u - Mat4::Identity()).norm() < 1e-10) return PulseSpec{p, t_inv};
  }
  return Infeasible{
      "no duration within the search window closes the loop: the sector "
      "frequencies are incommensurate"};
}

std::variant<ClosurePrescription, NotClosed> product_closure_check(
    const PulseSpec& p1, const PulseSpec& p2) {
  if (p1.params.axis != p2.params.axis)
    return NotClosed{"pulses have different field axes"};
  const Axis h = p1.params.axis;
  const ReducedParams red1 = reduce(p1.params);
  const ReducedParams red2 = reduce(p2.params);

  ClosurePrescription out;
  const auto rows = sector_rows(h);
  Mat4 predicted = Mat4::Zero();
  Vec3 realized_axis[2];
  double realized_theta[2];

  for (int j = 0; j < 2; ++j) {
    const int alpha = sector_host_label(h, j);
    const auto [b1, j1] = sector_bj(p1.params, alpha);
    const auto [b2, j2] = sector_bj(p2.params, alpha);

    int S;
    if (std::abs(j1) > kLabelDeadZone)
      S = (j2 * j1 >= 0.0) ? +1 : -1;
    else if (std::abs(b1) > kLabelDeadZone)
      S = (b2 * b1 >= 0.0) ? +1 : -1;
    else
      S = +1;
    if (std::abs(j2 - S * j1) > 1e-9 || std::abs(b2 - S * b1) > 1e-9) {
      std::ostringstream reason;
      reason << "sector " << j << " labels differ: (b, j) = (" << b1 << ", "
             << j1 << ") vs (" << b2 << ", " << j2
             << ") admit no common sign S";
      return NotClosed{reason.str()};
    }
    out.S[j] = S;

    const double r1 = (alpha < 0) ? red1.R_plus : red1.R_minus;
    const double r2 = (alpha < 0) ? red2.R_plus : red2.R_minus;
    const double dminus1 = r1 * p1.duration;
    const double dminus2 = r2 * p2.duration;
    const double dplus1 = -alpha * red1.J_axis * p1.duration;
    const double dplus2 = -alpha * red2.J_axis * p2.duration;

    const double plus_raw = dplus1 + dplus2;
    const double minus_raw = dminus1 + S * dminus2;

    const double plus_wrapped = wrap_pi(plus_raw);
    out.r[j] = static_cast<int>(std::lround((plus_raw - plus_wrapped) / (2.0 * M_PI)));
    out.delta_plus_out[j] = plus_wrapped;

    double minus_mod = std::fmod(minus_raw, 2.0 * M_PI);
    if (minus_mod < 0.0) minus_mod += 2.0 * M_PI;
    if (minus_mod <= M_PI) {
      out.delta_minus_out[j] = minus_mod;
      out.axis_flip[j] = false;
    } else {
      out.delta_minus_out[j] = 2.0 * M_PI - minus_mod;
      out.axis_flip[j] = true;
    }
    const double recovered =
        out.axis_flip[j] ? -out.delta_minus_out[j] : out.delta_minus_out[j];
    out.r_prime[j] = static_cast<int>(std::lround((minus_raw - recovered) / (2.0 * M_PI)));

    const Vec3 n1 = bell_block(p1.params, alpha).bloch;
    const Mat2 block =
        std::polar(1.0, plus_raw) *
        (std::cos(minus_raw) * Mat2::Identity() -
         kImag * std::sin(minus_raw) * dot_sigma(n1));
    predicted(rows[j][0], rows[j][0]) = block(0, 0);
    predicted(rows[j][0], rows[j][1]) = block(0, 1);
    predicted(rows[j][1], rows[j][0]) = block(1, 0);
    predicted(rows[j][1], rows[j][1]) = block(1, 1);

    realized_axis[j] = out.axis_flip[j] ? Vec3(-n1) : n1;
    realized_theta[j] = out.delta_minus_out[j];
    if (realized_theta[j] == 0.0) realized_axis[j] = bloch_plane(h)[0];
  }

  out.predicted = predicted;
  const int alpha0 = sector_host_label(h, 0);
  const double axial = -out.delta_plus_out[0] / alpha0;
  out.realized = pulse_from_sector_axes(h, realized_axis[0], realized_theta[0],
                                        realized_axis[1], realized_theta[1],
                                        axial, 1.0);
  return out;
}

Sector compose_bch(const Sector& s1, const Sector& s2) {
  if (s1.row_k != s2.row_k || s1.row_l != s2.row_l)
    throw RowMismatch("sectors live on different row pairs");

  const double c1 = std::cos(s1.phases.delta_minus);
  const double q1 = std::sin(s1.phases.delta_minus);
  const double c2 = std::cos(s2.phases.delta_minus);
  const double q2 = std::sin(s2.phases.delta_minus);
  const Vec3& n1 = s1.bloch;
  const Vec3& n2 = s2.bloch;

  const double cos_out = c1 * c2 - q1 * q2 * n1.dot(n2);
  const Vec3 vec = q1 * c2 * n1 + c1 * q2 * n2 + q1 * q2 * n1.cross(n2);
  const double sin_out = vec.norm();

  Sector out;
  out.row_k = s1.row_k;
  out.row_l = s1.row_l;
  out.mu = 0;
  out.sign_beta = s1.sign_beta;
  out.sign_q = s1.sign_q;
  out.phases.delta_plus = s1.phases.delta_plus + s2.phases.delta_plus;
  out.phases.delta_minus = std::atan2(sin_out, cos_out);
  if (sin_out > 1e-12) {
    out.bloch = vec / sin_out;
    out.axis_observable = true;
  } else {
    out.bloch = Vec3::UnitZ();
    out.axis_observable = false;
  }
  out.mat = std::polar(1.0, out.phases.delta_plus) *
            (std::cos(out.phases.delta_minus) * Mat2::Identity() -
             kImag * std::sin(out.phases.delta_minus) * dot_sigma(out.bloch));
  return out;
}

bool commutes(const PulseSpec& p1, const PulseSpec& p2, double tol) {
  if (p1.params.axis != p2.params.axis)
    throw InvalidInput("commutation criterion requires a common axis");
  const ReducedParams r1 = reduce(p1.params);
  const ReducedParams r2 = reduce(p2.params);
  // Sector alpha pairs (Jpair_alpha, B_{-alpha}); proportionality is the
  // vanishing cross product, which makes 0/0 well behaved.
  const double cross_minus = r1.Jpair_minus * r2.B_plus - r2.Jpair_minus * r1.B_plus;
  const double cross_plus = r1.Jpair_plus * r2.B_minus - r2.Jpair_plus * r1.B_minus;
  const double scale_minus =
      std::max(1.0, std::max(std::abs(r1.Jpair_minus) + std::abs(r1.B_plus),
                             std::abs(r2.Jpair_minus) + std::abs(r2.B_plus)));
  const double scale_plus =
      std::max(1.0, std::max(std::abs(r1.Jpair_plus) + std::abs(r1.B_minus),
                             std::abs(r2.Jpair_plus) + std::abs(r2.B_minus)));
  return std::abs(cross_minus) <= tol * scale_minus &&
         std::abs(cross_plus) <= tol * scale_plus;
}

Mat4 diagonal_family_element(Axis h, double phi, int s1, int s2) {
  const auto rows = sector_rows(h);
  Mat4 d = Mat4::Zero();
  const Complex z1 = static_cast<double>(s1) * std::polar(1.0, phi);
  const Complex z2 = static_cast<double>(s2) * std::polar(1.0, -phi);
  d(rows[0][0], rows[0][0]) = z1;
  d(rows[0][1], rows[0][1]) = z1;
  d(rows[1][0], rows[1][0]) = z2;
  d(rows[1][1], rows[1][1]) = z2;
  return d;
}

Classification classify_special(const Mat4& u, Axis h, double tol) {
  const auto sectors = extract_sectors(u, h, std::max(tol, 1e-12));
  Classification out;

  bool diagonal = true;
  for (const Sector& s : sectors)
    if (std::abs(s.mat(0, 1)) > tol || std::abs(s.mat(1, 0)) > tol ||
        std::abs(std::abs(s.mat(0, 0)) - 1.0) > tol)
      diagonal = false;

  if (diagonal) {
    // Within a sector the two diagonal entries agree; across sectors the
    // phases are conjugate up to the +-1 pair.
    const Complex z1 = sectors[0].mat(0, 0);
    const Complex z2 = sectors[1].mat(0, 0);
    if (std::abs(sectors[0].mat(1, 1) - z1) <= tol &&
        std::abs(sectors[1].mat(1, 1) - z2) <= tol) {
      out.diagonal_family = true;
      out.phase = std::arg(z1);
      out.signs[0] = +1;
      out.signs[1] = (std::abs(z2 - std::conj(z1)) <= tol) ? +1 : -1;
      out.global_phase = (u - z1 * Mat4::Identity()).norm() <= tol;
    }
  }

  out.sector_phase_free =
      std::abs(sectors[0].mat.determinant() - Complex(1.0)) <= tol &&
      std::abs(sectors[1].mat.determinant() - Complex(1.0)) <= tol;

  if (out.global_phase)
    out.primary = SpecialClass::GlobalPhase;
  else if (out.diagonal_family)
    out.primary = SpecialClass::DiagonalFamily;
  else if (out.sector_phase_free)
    out.primary = SpecialClass::SectorPhaseOnly;
  else
    out.primary = SpecialClass::Generic;
  return out;
}

Classification classify_special(const EvolutionOp& u, double tol) {
  return classify_special(u.mat, u.axis, tol);
}

NormalityReport normality_witness(Axis h, int samples, Rng& rng) {
  NormalityReport report;
  report.samples = samples;
  for (int s = 0; s < samples; ++s) {
    const double phi = rng.uniform(0.0, 2.0 * M_PI);
    const int s1 = rng.uniform() < 0.5 ? -1 : +1;
    const int s2 = rng.uniform() < 0.5 ? -1 : +1;
    const Mat4 d = diagonal_family_element(h, phi, s1, s2);

    ModelParams pa, pb;
    pa.axis = pb.axis = h;
    for (int k = 0; k < 3; ++k) {
      pa.coupling[k] = rng.uniform(-3.0, 3.0);
      pb.coupling[k] = rng.uniform(-3.0, 3.0);
    }
    pa.field1 = rng.uniform(-3.0, 3.0);
    pa.field2 = rng.uniform(-3.0, 3.0);
    pb.field1 = rng.uniform(-3.0, 3.0);
    pb.field2 = rng.uniform(-3.0, 3.0);
    const Mat4 u = evolve_closed(pb, rng.uniform(0.0, 3.0)).mat *
                   evolve_closed(pa, rng.uniform(0.0, 3.0)).mat;

    report.max_commutator =
        std::max(report.max_commutator, (u * d - d * u).norm());
    report.max_conjugation_defect = std::max(
        report.max_conjugation_defect, (u * d * u.adjoint() - d).norm());
  }
  return report;
}

}  // namespace bellsector
