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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bellsector/types.hpp"

namespace bellsector {

struct CheckResult {
  std::string name;
  bool pass = false;
  double observed = 0.0;  // worst deviation seen
  double tol = 0.0;
  std::string note;
};

struct VerifyConfig {
  std::uint64_t seed = 42;
  int spectral_draws = 1000;     // per axis
  int evolution_draws = 1000;    // per axis
  int structure_draws = 200;     // per axis
  int state_draws = 10000;
  int eigenstate_draws = 200;
  int closure_draws = 100;       // per axis
  int inverse_draws = 100;
  int bch_draws = 10000;
  int commute_draws = 100;
  int rotation_draws = 100;
  int synthesis_targets = 1000;  // per axis
  std::optional<Axis> only_axis;
};

std::vector<CheckResult> verify_spectrum(const VerifyConfig& cfg);
std::vector<CheckResult> verify_evolution(const VerifyConfig& cfg);
std::vector<CheckResult> verify_structure(const VerifyConfig& cfg);
std::vector<CheckResult> verify_entanglement(const VerifyConfig& cfg);
std::vector<CheckResult> verify_group(const VerifyConfig& cfg);
std::vector<CheckResult> verify_rotation(const VerifyConfig& cfg);
std::vector<CheckResult> verify_synthesis(const VerifyConfig& cfg);

const std::vector<std::string>& suite_names();

/// Runs one suite by name ("all" runs every suite in order).  Throws
/// InvalidInput for unknown names.
std::vector<CheckResult> run_suite(const std::string& suite,
                                   const VerifyConfig& cfg);

inline bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace bellsector
