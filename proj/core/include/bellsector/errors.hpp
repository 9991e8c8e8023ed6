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

#include <stdexcept>
#include <string>

namespace bellsector {

struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotHermitian : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotNormalized : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A matrix claimed to be in S_h has weight outside the sector pattern.
struct StructureViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonUnitAxis : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A sector's Bloch axis cannot be read off because its rotation angle is
/// a multiple of pi.
struct IndeterminateLabel : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RowMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SolverFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bellsector
