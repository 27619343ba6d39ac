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

#include <Eigen/Dense>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gibbsforge/errors.hpp"
#include "gibbsforge/pauli.hpp"

namespace gibbsforge {

/// One factor e^{i·k·π/8 · Z_S} of the diagonal part. Qubits sorted ascending.
struct Monomial {
  std::vector<int> qubits;
  int k = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

struct ProgramMeta {
  std::string family = "custom";
  int L = 0;
  /// Partition of the two-qubit monomials into matchings (monomial indices).
  std::vector<std::vector<int>> layers;

  friend bool operator==(const ProgramMeta&, const ProgramMeta&) = default;
};

/// An IQP circuit H^{⊗n} · D · H^{⊗n} · B, where D is the product of the
/// monomials and B is the CNOT prefix, applied first, in list order.
struct XProgram {
  int n = 0;
  std::vector<Monomial> monomials;
  std::vector<std::pair<int, int>> cnot_prefix;
  ProgramMeta meta;

  friend bool operator==(const XProgram&, const XProgram&) = default;
};

/// Throws InputError unless supports are nonempty, in range and duplicate-free,
/// prefix pairs are distinct in-range qubits, and layers (when present) are a
/// matching partition of the two-qubit monomials.
void validate(const XProgram& program);

/// Sorts each support, then the monomial list, remapping layer indices.
XProgram canonicalize(XProgram program);

/// Checks that `layers` covers every two-qubit monomial exactly once with
/// pairwise disjoint supports inside each layer.
bool layers_are_matchings(const XProgram& program);

/// Number of two-qubit layers: the recorded layering when valid, otherwise a
/// greedy layering computed on the fly.
int two_qubit_depth(const XProgram& program);

/// Induced program on `qubits` (relabeled to 0..|qubits|-1 in the given order),
/// keeping only monomials and prefix pairs fully inside the subset.
XProgram restrict_to(const XProgram& program, const std::vector<int>& qubits);

enum class LatticeFamily { raussendorf3d, brickwork2d };

std::string to_string(LatticeFamily f);
LatticeFamily parse_family(const std::string& name);

/// Which qubits receive a single-qubit e^{i·single_k·π/8 Z}, and the common
/// edge angle. `designated` unset means every qubit.
struct PhasePattern {
  int edge_k = 2;
  int single_k = 1;
  std::optional<std::vector<int>> designated;
};

struct LatticeSpec {
  LatticeFamily family = LatticeFamily::brickwork2d;
  int L = 1;
  PhasePattern phase_pattern;
};

/// Undirected interaction graph of a lattice family.
struct LatticeGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  /// Bipartition side of each vertex (0 or 1).
  std::vector<int> side;
};

/// Qubits on the edges and faces of an L×L×L cubic complex, linked by
/// face-edge incidence. Edge qubits come first, then faces.
LatticeGraph raussendorf_graph(int L);
/// L×L square grid, qubit (row, col) at index row·L + col.
LatticeGraph square_grid_graph(int L);

/// Partition of edge indices into matchings with max-degree many colors
/// (alternating-path recoloring on a bipartite graph).
std::vector<std::vector<int>> bipartite_edge_coloring(const LatticeGraph& graph);

XProgram generate_family(const LatticeSpec& spec);

/// Random IQP program with `depth` random two-qubit matchings and random
/// single-qubit phases. Angles k drawn from 1..7.
XProgram random_program(int n, int depth, std::uint64_t seed, double single_density = 0.7);

/// Physical index of slot j (0-based, 0 = leader) of logical block i.
inline int physical_index(int block, int slot, int r) { return block * r + slot; }

/// Each monomial on S becomes one monomial on the union of the blocks of S.
XProgram encode_bms(const XProgram& program, int r);
/// Leader-controlled CNOT fan-out per block, then the program on the leaders.
XProgram encode_cnot(const XProgram& program, int r);

/// Basis permutation of the CNOT prefix: bit t ^= bit c for each pair in order.
std::uint64_t apply_cnot_prefix(const XProgram& program, std::uint64_t basis);

/// Integer m(y) with D|y⟩ = e^{i·m(y)·π/8}|y⟩.
std::vector<int> diagonal_phase_units(const XProgram& program);

template <typename Real = double>
using ComplexVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

/// In-place normalized Walsh–Hadamard transform H^{⊗n} of a length-2^n vector.
template <typename Derived>
void walsh_hadamard(Eigen::MatrixBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  using Real = typename Eigen::NumTraits<Scalar>::Real;
  const Eigen::Index dim = v.size();
  for (Eigen::Index h = 1; h < dim; h <<= 1) {
    for (Eigen::Index i = 0; i < dim; i += h << 1) {
      for (Eigen::Index j = i; j < i + h; ++j) {
        const Scalar a = v(j), b = v(j + h);
        v(j) = a + b;
        v(j + h) = a - b;
      }
    }
  }
  v *= Real(1) / std::sqrt(static_cast<Real>(dim));
}

/// Precomputed pieces of U = H D H B for column-by-column evaluation.
template <typename Real = double>
class ColumnEvaluator {
 public:
  explicit ColumnEvaluator(const XProgram& program) : program_(program) {
    const auto units = diagonal_phase_units(program);
    phases_.resize(static_cast<Eigen::Index>(units.size()));
    for (std::size_t y = 0; y < units.size(); ++y) {
      phases_(static_cast<Eigen::Index>(y)) = phase_of(units[y]);
    }
  }

  /// U|x⟩ written into `out`.
  void column(std::uint64_t x, ComplexVector<Real>& out) const {
    out.setZero(phases_.size());
    out(static_cast<Eigen::Index>(apply_cnot_prefix(program_, x))) = 1;
    walsh_hadamard(out);
    out.array() *= phases_.array();
    walsh_hadamard(out);
  }

  Eigen::Index dim() const { return phases_.size(); }

 private:
  static std::complex<Real> phase_of(int m) {
    const int j = ((m % 16) + 16) % 16;
    // Exact values on the axes and diagonals.
    if (j % 2 == 0) {
      const auto [c, s] = eighth_turn_cos_sin(j / 2);
      return {static_cast<Real>(c), static_cast<Real>(s)};
    }
    const Real a = static_cast<Real>(j) * static_cast<Real>(M_PI) / Real(8);
    return {std::cos(a), std::sin(a)};
  }

  const XProgram& program_;
  ComplexVector<Real> phases_;
};

/// Dense unitary H^{⊗n}·D·H^{⊗n}·B.
template <typename Real = double>
DenseMatrix<std::complex<Real>> unitary_of(const XProgram& program, int cap = dense_cap()) {
  validate(program);
  detail::check_dense_cap(program.n, cap);
  ColumnEvaluator<Real> eval(program);
  const Eigen::Index dim = eval.dim();
  DenseMatrix<std::complex<Real>> u(dim, dim);
  ComplexVector<Real> col;
  for (Eigen::Index x = 0; x < dim; ++x) {
    eval.column(static_cast<std::uint64_t>(x), col);
    u.col(x) = col;
  }
  return u;
}

}  // namespace gibbsforge
