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

#include "bellsector/group.hpp"
#include "bellsector/model.hpp"
#include "bellsector/rng.hpp"

namespace bellsector {

inline ModelParams random_params(Rng& rng, Axis axis, double scale = 3.0) {
  ModelParams p;
  for (int k = 0; k < 3; ++k) p.coupling[k] = rng.uniform(-scale, scale);
  p.field1 = rng.uniform(-scale, scale);
  p.field2 = rng.uniform(-scale, scale);
  p.axis = axis;
  return p;
}

inline PulseSpec random_pulse(Rng& rng, Axis axis, double scale = 3.0,
                              double max_duration = 3.0) {
  return {random_params(rng, axis, scale), rng.uniform(0.0, max_duration)};
}

inline BellVector random_state(Rng& rng) {
  BellVector v;
  for (int k = 0; k < 4; ++k) v[k] = rng.complex_normal();
  v.normalize();
  return v;
}

}  // namespace bellsector
