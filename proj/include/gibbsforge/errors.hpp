// Copyright 2026 The gibbsforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace gibbsforge {

// Malformed arguments or inputs: bad sizes, out-of-range qubits, bad rates.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A dense or state-vector path was asked for more qubits than its cap allows.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Something that must not happen for supported inputs.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Dense-path qubit cap. Defaults to 12; GIBBSFORGE_CAP_N overrides it when it
/// parses as an integer in [1, 16]. Other values are ignored.
int dense_cap();

/// True when GIBBSFORGE_CAP_N was set and accepted.
bool dense_cap_overridden();

/// Default cap of the Monte Carlo state-vector sampler.
inline constexpr int kSamplerCap = 24;

/// Coefficients below this magnitude are treated as zero.
inline constexpr double kPruneTol = 1e-12;

}  // namespace gibbsforge
