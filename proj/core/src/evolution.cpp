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

#include "bellsector/evolution.hpp"

#include <algorithm>
#include <cmath>

#include "bellsector/errors.hpp"

namespace bellsector {

namespace {

// Structural signs (beta, q) of sector j for each axis, matching the
// conjugation and off-diagonal pattern of the assembled matrix.
struct SectorSigns {
  int beta;
  int q;
};

SectorSigns sector_signs(Axis h, int j) {
  switch (h) {
    case Axis::X: return j == 0 ? SectorSigns{-1, -1} : SectorSigns{+1, +1};
    case Axis::Y: return SectorSigns{+1, -1};
    case Axis::Z: return SectorSigns{+1, +1};
  }
  throw InvalidInput("axis out of range");
}

Mat2 rotation_block(double delta_minus, const Vec3& n) {
  const double c = std::cos(delta_minus);
  const double s = std::sin(delta_minus);
  Mat2 m = c * Mat2::Identity();
  m -= kImag * s * dot_sigma(n);
  return m;
}

void place_sector(Mat4& u, const Sector& s) {
  u(s.row_k, s.row_k) = s.mat(0, 0);
  u(s.row_k, s.row_l) = s.mat(0, 1);
  u(s.row_l, s.row_k) = s.mat(1, 0);
  u(s.row_l, s.row_l) = s.mat(1, 1);
}

}  // namespace

std::array<std::array<int, 2>, 2> sector_rows(Axis h) {
  switch (h) {
    case Axis::X: return {{{0, 1}, {2, 3}}};
    case Axis::Y: return {{{0, 3}, {1, 2}}};
    case Axis::Z: return {{{0, 2}, {1, 3}}};
  }
  throw InvalidInput("axis out of range");
}

int sector_host_label(Axis h, int j) {
  const int first = (h == Axis::Y) ? +1 : -1;
  return j == 0 ? first : -first;
}

Sector sector_from_exponential(double delta_plus, double delta_minus,
                               const Vec3& n) {
  if (std::abs(n.norm() - 1.0) > 1e-9)
    throw NonUnitAxis("sector axis must be a unit vector");
  Sector s;
  s.phases = {delta_plus, delta_minus};
  s.bloch = n;
  s.mat = std::polar(1.0, delta_plus) * rotation_block(delta_minus, n);
  s.axis_observable = std::abs(std::sin(delta_minus)) > 1e-12;
  return s;
}

EvolutionOp evolve_closed(const ModelParams& params, double t) {
  const ReducedParams red = reduce(params);
  const auto rows = sector_rows(params.axis);
  EvolutionOp op;
  op.axis = params.axis;
  op.time = t;
  op.mat = Mat4::Zero();
  for (int j = 0; j < 2; ++j) {
    const int mu = sector_host_label(params.axis, j);
    const BellBlock blk = bell_block(params, mu);
    Sector s;
    s.row_k = rows[j][0];
    s.row_l = rows[j][1];
    s.mu = mu;
    const SectorSigns signs = sector_signs(params.axis, j);
    s.sign_beta = signs.beta;
    s.sign_q = signs.q;
    s.phases.delta_plus = -mu * red.J_axis * t;
    s.phases.delta_minus = blk.rabi * t;
    s.bloch = blk.bloch;
    s.axis_observable = std::abs(std::sin(s.phases.delta_minus)) > 1e-12;
    s.mat = std::polar(1.0, s.phases.delta_plus) *
            rotation_block(s.phases.delta_minus, s.bloch);
    place_sector(op.mat, s);
    op.sectors[j] = s;
  }
  return op;
}

Mat4 evolve_oracle(const ModelParams& params, double t) {
  const OracleEigenSystem sys = oracle_diagonalize(bell_hamiltonian(params));
  Mat4 u = Mat4::Zero();
  for (int k = 0; k < 4; ++k) {
    const Vec4 v = sys.vectors.col(k);
    u += std::polar(1.0, -sys.values[k] * t) * (v * v.adjoint());
  }
  return u;
}

std::array<double, 2> sector_bj(const ModelParams& params, int alpha) {
  const ReducedParams red = reduce(params);
  const double b = (alpha < 0) ? red.b_plus : red.b_minus;
  double jj = (alpha < 0) ? red.j_plus : red.j_minus;
  // The y-axis pair difference enters the closed forms with reversed
  // orientation relative to the cyclic reading (see bell_block).
  if (params.axis == Axis::Y && alpha < 0) jj = -jj;
  return {b, jj};
}

Mat4 sector_form_matrix(const ModelParams& params, double t) {
  const ReducedParams red = reduce(params);
  const auto rows = sector_rows(params.axis);
  const int h = axis_index(params.axis);
  // i^h and its conjugate.
  const Complex ih = (h == 1) ? kImag : (h == 2) ? Complex(-1, 0) : -kImag;

  Mat4 u = Mat4::Zero();
  for (int j = 0; j < 2; ++j) {
    const int alpha = sector_host_label(params.axis, j);
    const SectorSigns signs = sector_signs(params.axis, j);
    const auto [b, jj] = sector_bj(params, alpha);
    const double rabi = (alpha < 0) ? red.R_plus : red.R_minus;
    const double dminus = rabi * t;
    const double dplus = alpha * red.J_axis * t;
    const Complex e =
        Complex(std::cos(dminus), signs.beta * jj * std::sin(dminus));
    const double d = b * std::sin(dminus);
    const Complex phase = std::polar(1.0, dplus);
    const int k = rows[j][0], l = rows[j][1];
    u(k, k) = phase * std::conj(e);
    u(k, l) = phase * (-static_cast<double>(signs.q) * ih * d);
    u(l, k) = phase * (static_cast<double>(signs.q) * std::conj(ih) * d);
    u(l, l) = phase * e;
  }
  return u;
}

std::array<Sector, 2> extract_sectors(const Mat4& u, Axis h, double tol) {
  const auto rows = sector_rows(h);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      bool allowed = false;
      for (const auto& kl : rows) {
        const bool rin = (r == kl[0] || r == kl[1]);
        const bool cin = (c == kl[0] || c == kl[1]);
        if (rin && cin) { allowed = true; break; }
      }
      if (!allowed && std::abs(u(r, c)) > tol)
        throw StructureViolation("matrix has weight outside the sector pattern of axis " +
                                 axis_name(h));
    }
  }

  std::array<Sector, 2> out;
  for (int j = 0; j < 2; ++j) {
    Sector s;
    s.row_k = rows[j][0];
    s.row_l = rows[j][1];
    s.mu = sector_host_label(h, j);
    const SectorSigns signs = sector_signs(h, j);
    s.sign_beta = signs.beta;
    s.sign_q = signs.q;
    s.mat << u(s.row_k, s.row_k), u(s.row_k, s.row_l),
             u(s.row_l, s.row_k), u(s.row_l, s.row_l);

    const Complex det = s.mat.determinant();
    s.phases.delta_plus = 0.5 * std::arg(det);
    const Mat2 w = std::polar(1.0, -s.phases.delta_plus) * s.mat;
    const double c = std::clamp(0.5 * w.trace().real(), -1.0, 1.0);
    Vec3 v;
    for (int k = 1; k <= 3; ++k)
      v[k - 1] = -0.5 * (w * pauli(k)).trace().imag();
    const double sn = v.norm();
    s.phases.delta_minus = std::atan2(sn, c);
    if (sn > 1e-12) {
      s.bloch = v / sn;
      s.axis_observable = true;
    } else {
      s.bloch = Vec3::UnitZ();
      s.axis_observable = false;
    }
    out[j] = s;
  }
  return out;
}

std::array<Sector, 2> extract_sectors(const EvolutionOp& u, double tol) {
  return extract_sectors(u.mat, u.axis, tol);
}

std::array<int, 2> pair_mapping(Axis h, int mu, int nu) {
  switch (h) {
    case Axis::X: return {mu, -nu};
    case Axis::Y: return {-mu, -nu};
    case Axis::Z: return {-mu, nu};
  }
  throw InvalidInput("axis out of range");
}

}  // namespace bellsector
