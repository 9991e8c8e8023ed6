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

#include "bellsector/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "bellsector/errors.hpp"

namespace bellsector {

Mat4 hamiltonian_matrix(const ModelParams& params) {
  validate(params);
  const int h = axis_index(params.axis);
  Mat4 ham = Mat4::Zero();
  for (int k = 1; k <= 3; ++k)
    ham -= params.coupling[k - 1] * kron(pauli(k), pauli(k));
  ham += params.field1 * kron(pauli(h), Mat2::Identity());
  ham += params.field2 * kron(Mat2::Identity(), pauli(h));
  return ham;
}

Mat4 bell_hamiltonian(const ModelParams& params) {
  return to_bell_basis(hamiltonian_matrix(params));
}

BellBlock bell_block(const ModelParams& params, int mu) {
  const ReducedParams r = reduce(params);
  const double bp = r.b_plus, jp = r.j_plus;
  const double bm = r.b_minus, jm = r.j_minus;
  BellBlock blk;
  blk.mu = mu;
  blk.rabi = (mu < 0) ? r.R_plus : r.R_minus;
  switch (params.axis) {
    case Axis::X:
      if (mu < 0) { blk.row_k = 0; blk.row_l = 1; blk.bloch = {bp, 0.0, jp}; }
      else        { blk.row_k = 2; blk.row_l = 3; blk.bloch = {-bm, 0.0, -jm}; }
      break;
    case Axis::Y:
      // The pair difference J_i - J_j enters the mu = -1 block with the
      // opposite orientation to the cyclic (3,1) reading; the spectral
      // oracle pins this sign (H phi = E phi fails with the other choice).
      if (mu < 0) { blk.row_k = 1; blk.row_l = 2; blk.bloch = {0.0, -bp, jp}; }
      else        { blk.row_k = 0; blk.row_l = 3; blk.bloch = {0.0, -bm, -jm}; }
      break;
    case Axis::Z:
      if (mu < 0) { blk.row_k = 0; blk.row_l = 2; blk.bloch = {bp, 0.0, -jp}; }
      else        { blk.row_k = 1; blk.row_l = 3; blk.bloch = {bm, 0.0, -jm}; }
      break;
  }
  return blk;
}

EnergyLevels closed_form_levels(const ModelParams& params) {
  const ReducedParams r = reduce(params);
  EnergyLevels e;
  for (int mu : {-1, +1})
    for (int nu : {-1, +1}) {
      const double rabi = (mu < 0) ? r.R_plus : r.R_minus;
      e.values[bell_index(mu, nu)] = mu * r.J_axis + nu * rabi;
    }
  return e;
}

EnergyLevels EigenSystem::levels() const {
  EnergyLevels e;
  for (int k = 0; k < 4; ++k) e.values[k] = pairs[k].value;
  return e;
}

BellVector canonical_phase(BellVector v) {
  int pivot = -1;
  for (int k = 0; k < 4; ++k)
    if (std::abs(v[k]) > 1e-6) { pivot = k; break; }
  if (pivot < 0) {
    double best = 0.0;
    for (int k = 0; k < 4; ++k)
      if (std::abs(v[k]) > best) { best = std::abs(v[k]); pivot = k; }
    if (pivot < 0) return v;
  }
  const Complex z = v[pivot];
  v *= std::conj(z) / std::abs(z);
  return v;
}

EigenSystem closed_form_vectors(const ModelParams& params) {
  const ReducedParams r = reduce(params);
  EigenSystem sys;
  for (int mu : {-1, +1}) {
    const BellBlock blk = bell_block(params, mu);
    const Vec3 m = blk.bloch;
    for (int nu : {-1, +1}) {
      EigenPair& pair = sys.pairs[bell_index(mu, nu)];
      pair.mu = mu;
      pair.nu = nu;
      pair.value = mu * r.J_axis + nu * blk.rabi;
      pair.degenerate_pair = blk.rabi == 0.0;
      // Eigenvector of m.sigma with eigenvalue nu, taking whichever of
      // the two algebraic branches keeps the denominator >= 1.
      Complex a, b;
      if (nu * m.z() <= 0.0) {
        const double den = std::sqrt(2.0 * (1.0 - nu * m.z()));
        a = Complex(m.x(), -m.y()) / den;
        b = Complex(nu - m.z(), 0.0) / den;
      } else {
        const double den = std::sqrt(2.0 * (1.0 + nu * m.z()));
        a = Complex(nu + m.z(), 0.0) / den;
        b = Complex(m.x(), m.y()) / den;
      }
      BellVector v = BellVector::Zero();
      v[blk.row_k] = a;
      v[blk.row_l] = b;
      pair.vector = canonical_phase(std::move(v));
    }
  }
  return sys;
}

namespace {

// One two-sided Jacobi rotation zeroing the (p,q) entry of a Hermitian
// matrix, accumulated into the eigenvector matrix.
void jacobi_rotate(Mat4& a, Mat4& vecs, int p, int q) {
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const Complex phase = apq / r;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * r);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  // V restricted to (p,q): [[c, s*phase], [-s*conj(phase), c]].
  for (int k = 0; k < 4; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - s * std::conj(phase) * akq;
    a(k, q) = s * phase * akp + c * akq;
  }
  for (int k = 0; k < 4; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk - s * phase * aqk;
    a(q, k) = s * std::conj(phase) * apk + c * aqk;
  }
  for (int k = 0; k < 4; ++k) {
    const Complex vkp = vecs(k, p);
    const Complex vkq = vecs(k, q);
    vecs(k, p) = c * vkp - s * std::conj(phase) * vkq;
    vecs(k, q) = s * phase * vkp + c * vkq;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = Complex(a(p, p).real(), 0.0);
  a(q, q) = Complex(a(q, q).real(), 0.0);
}

double off_diagonal_norm(const Mat4& a) {
  double sum = 0.0;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      if (r != c) sum += std::norm(a(r, c));
  return std::sqrt(sum);
}

}  // namespace

OracleEigenSystem oracle_diagonalize(const Mat4& hermitian) {
  const double scale = std::max(1.0, hermitian.norm());
  if ((hermitian - Mat4(hermitian.adjoint())).norm() > 1e-12 * scale)
    throw NotHermitian("oracle_diagonalize: input is not Hermitian");

  Mat4 a = 0.5 * (hermitian + Mat4(hermitian.adjoint()));
  Mat4 vecs = Mat4::Identity();
  for (int sweep = 0; sweep < 50; ++sweep) {
    if (off_diagonal_norm(a) <= 1e-15 * scale) break;
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) jacobi_rotate(a, vecs, p, q);
  }

  OracleEigenSystem out;
  std::array<int, 4> order = {0, 1, 2, 3};
  std::array<double, 4> diag;
  for (int k = 0; k < 4; ++k) diag[k] = a(k, k).real();
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return diag[i] < diag[j]; });
  for (int k = 0; k < 4; ++k) {
    out.values[k] = diag[order[k]];
    out.vectors.col(k) = vecs.col(order[k]);
  }
  out.off_diagonal_residual = off_diagonal_norm(a);
  return out;
}

}  // namespace bellsector
