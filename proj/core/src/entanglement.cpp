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

#include "bellsector/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include "bellsector/errors.hpp"
#include "bellsector/evolution.hpp"

namespace bellsector {

namespace {

void require_normalized(const BellVector& v) {
  if (std::abs(v.norm() - 1.0) > 1e-8)
    throw NotNormalized("state norm deviates from 1 by more than 1e-8");
}

double binary_entropy(double lambda) {
  const auto xlog2x = [](double x) {
    return x > 0.0 ? x * std::log2(x) : 0.0;
  };
  return -xlog2x(lambda) - xlog2x(1.0 - lambda);
}

EntanglementReport report_from_concurrence(double c) {
  c = std::clamp(c, 0.0, 1.0);
  const double root = std::sqrt(std::max(0.0, 1.0 - c * c));
  EntanglementReport rep;
  rep.concurrence = c;
  rep.schmidt_plus = 0.5 * (1.0 + root);
  rep.schmidt_minus = 0.5 * (1.0 - root);
  rep.entropy = binary_entropy(rep.schmidt_plus);
  return rep;
}

}  // namespace

double concurrence_bell(const BellVector& v) {
  require_normalized(v);
  const Complex sum = v[0] * v[0] + v[3] * v[3] - v[1] * v[1] - v[2] * v[2];
  return std::min(1.0, std::abs(sum));
}

double concurrence_oracle(const BellVector& v) {
  require_normalized(v);
  const Vec4 a = bell_to_computational(v);
  // <psi| sy x sy |psi*> = 2 (a1 a2 - a0 a3), conjugated; the modulus is
  // insensitive to the conjugation.
  return std::min(1.0, 2.0 * std::abs(a[1] * a[2] - a[0] * a[3]));
}

EntanglementReport schmidt_and_entropy(const BellVector& v) {
  return report_from_concurrence(concurrence_bell(v));
}

std::array<EntanglementReport, 4> eigenstate_entanglement(
    const ModelParams& params) {
  std::array<EntanglementReport, 4> out;
  for (int mu : {-1, +1}) {
    const double b = std::abs(sector_bj(params, mu)[0]);
    const double c = std::sqrt(std::max(0.0, 1.0 - b * b));
    for (int nu : {-1, +1}) out[bell_index(mu, nu)] = report_from_concurrence(c);
  }
  return out;
}

int bell_pair_host_label(Axis h, int mu, int nu) {
  switch (h) {
    case Axis::X: return mu;
    case Axis::Y: return mu * nu;
    case Axis::Z: return nu;
  }
  throw InvalidInput("axis out of range");
}

double bell_pair_rabi(const ModelParams& params, int mu, int nu) {
  const ReducedParams r = reduce(params);
  const int f = bell_pair_host_label(params.axis, mu, nu);
  return (f < 0) ? r.R_plus : r.R_minus;
}

BellConcurrenceSample bell_concurrence_evolution(const ModelParams& params,
                                                 int mu, int nu, double t) {
  const int f = bell_pair_host_label(params.axis, mu, nu);
  const auto [b, j] = sector_bj(params, f);
  const double s = std::sin(bell_pair_rabi(params, mu, nu) * t);
  const double s4 = s * s * s * s;

  BellConcurrenceSample sample;
  sample.sector_form = 1.0 - 4.0 * j * b * s4;

  BellVector state = BellVector::Zero();
  state[bell_index(mu, nu)] = 1.0;
  sample.oracle = concurrence_oracle(evolve_closed(params, t).mat * state);
  sample.gap = std::abs(sample.sector_form - sample.oracle);
  return sample;
}

}  // namespace bellsector
