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

#include "gibbsforge/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gibbsforge {

PauliSum ParentHamiltonian::sum() const {
  PauliSum total(n);
  for (const auto& t : terms) total += t.term;
  return total;
}

PauliSum conjugate_by_prefix(const PauliSum& op, const XProgram& program) {
  PauliSum out = op;
  for (const auto& [c, t] : program.cnot_prefix) out = conjugate_by_cnot(out, c, t);
  return out;
}

PauliSum conjugate_by_program(const PauliSum& op, const XProgram& program) {
  std::vector<int> all(program.n);
  std::iota(all.begin(), all.end(), 0);
  PauliSum out = conjugate_by_prefix(op, program);
  out = conjugate_by_hadamard_layer(out, all);
  for (const auto& m : program.monomials) out = conjugate_by_phase_gate(out, m.qubits, m.k);
  return conjugate_by_hadamard_layer(out, all);
}

ParentHamiltonian build_parent(const XProgram& program) {
  validate(program);
  ParentHamiltonian h;
  h.n = program.n;
  h.terms.reserve(program.n);
  for (int q = 0; q < program.n; ++q) {
    h.terms.push_back({q, conjugate_by_program(PauliSum::excited_projector(program.n, q), program)});
  }
  return h;
}

InteractionProfile analyze(const ParentHamiltonian& h) {
  InteractionProfile p;
  std::vector<int> membership(h.n, 0), foreign(h.n, 0);
  for (const auto& t : h.terms) {
    std::vector<std::size_t> ones = t.term.support().ones();
    std::vector<int> support(ones.begin(), ones.end());
    p.locality_k = std::max(p.locality_k, static_cast<int>(support.size()));
    for (int q : support) {
      ++membership[q];
      if (q != t.origin) ++foreign[q];
    }
    p.per_term_supports.push_back(std::move(support));
  }
  if (h.n > 0) {
    p.degree = *std::max_element(membership.begin(), membership.end());
    p.degree_excluding_own = *std::max_element(foreign.begin(), foreign.end());
  }
  return p;
}

double partition_function(int n, double beta) {
  if (std::isnan(beta)) throw InputError("partition_function: beta is NaN");
  return std::pow(1.0 + std::exp(-beta), n);
}

}  // namespace gibbsforge
