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

#include <vector>

#include "gibbsforge/circuit.hpp"
#include "gibbsforge/pauli.hpp"

namespace gibbsforge {

/// C · ½(1 − Z_origin) · C† for one input qubit.
struct OriginTerm {
  int origin = 0;
  PauliSum term;
};

/// H_C = C·H_NI·C†, kept as one conjugated projector per input qubit.
struct ParentHamiltonian {
  int n = 0;
  std::vector<OriginTerm> terms;

  PauliSum sum() const;
};

struct InteractionProfile {
  int locality_k = 0;
  /// Max over qubits of the number of terms whose support contains it.
  int degree = 0;
  /// Same count without the qubit's own term.
  int degree_excluding_own = 0;
  std::vector<std::vector<int>> per_term_supports;
};

/// B · op · B† for the program's CNOT prefix.
PauliSum conjugate_by_prefix(const PauliSum& op, const XProgram& program);
/// C · op · C† for the whole program.
PauliSum conjugate_by_program(const PauliSum& op, const XProgram& program);

ParentHamiltonian build_parent(const XProgram& program);

InteractionProfile analyze(const ParentHamiltonian& h);

/// (1 + e^{−β})^n, the partition function of every parent Hamiltonian.
double partition_function(int n, double beta);

}  // namespace gibbsforge
