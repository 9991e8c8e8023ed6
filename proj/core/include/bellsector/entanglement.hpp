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

struct EntanglementReport {
  double concurrence = 0.0;    // in [0, 1]
  double schmidt_plus = 1.0;   // larger lambda^2
  double schmidt_minus = 0.0;  // smaller lambda^2
  double entropy = 0.0;        // base-2, in [0, 1]
};

// Pure-state concurrence straight from the Bell amplitudes:
//   C = |B00^2 + B11^2 - B01^2 - B10^2|.
// Throws NotNormalized when the norm deviates from 1 by more than 1e-8.
double concurrence_bell(const BellVector& v);

/// Independent check: spin-flip overlap |<psi| sy x sy |psi*>| evaluated in
/// the computational basis.
double concurrence_oracle(const BellVector& v);

/// Schmidt coefficients lambda^2 = (1 +- sqrt(1 - C^2))/2 and the binary
/// entropy of the pair, with 0 log 0 = 0.
EntanglementReport schmidt_and_entropy(const BellVector& v);

/// Reports for the four closed-form eigenstates, label order (--,-+,+-,++).
/// Eigenstate Schmidt weights are (1 +- |b_{-mu}|)/2, so the entropy is
/// maximal exactly when the sector's b vanishes.
std::array<EntanglementReport, 4> eigenstate_entanglement(
    const ModelParams& params);

/// The sector label f whose Rabi frequency R_{-f} drives the evolved
/// concurrence of beta_{mu nu}: f = mu (x), mu*nu (y), nu (z).
int bell_pair_host_label(Axis h, int mu, int nu);

/// Rabi frequency R_{-f} of that sector.
double bell_pair_rabi(const ModelParams& params, int mu, int nu);

// Concurrence of U(t) applied to the Bell state beta_{mu nu}.  `sector_form`
// is the compact expression 1 - 4 j b sin^4(R t) carried by the sector
// algebra; `oracle` is the exact spin-flip value of the evolved state.  The
// two disagree away from the extremes (the exact value works out to
// sqrt(1 - 4 j^2 b^2 sin^4(R t))); both are reported so the gap stays
// visible.
struct BellConcurrenceSample {
  double sector_form = 1.0;
  double oracle = 1.0;
  double gap = 0.0;
};

BellConcurrenceSample bell_concurrence_evolution(const ModelParams& params,
                                                 int mu, int nu, double t);

}  // namespace bellsector
