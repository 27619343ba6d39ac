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
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gibbsforge/bitmask.hpp"
#include "gibbsforge/errors.hpp"

namespace gibbsforge {

/// A phased Pauli string i^phase · P_0 ⊗ P_1 ⊗ ... where qubit q carries
/// I, X, Z or Y according to (x_q, z_q) = (0,0), (1,0), (0,1), (1,1).
/// Y is the Hermitian Y, so the string is Hermitian iff phase is even.
class PauliTerm {
 public:
  PauliTerm() = default;
  PauliTerm(BitMask x, BitMask z, int phase = 0);

  static PauliTerm identity(int n);
  /// Single-qubit Pauli ('I', 'X', 'Y', 'Z') on qubit q of an n-qubit register.
  static PauliTerm single(int n, int q, char pauli);
  /// Parses "+XIZ", "-iY_Z" etc. Character q is qubit q; '_' and 'I' mean identity.
  static PauliTerm parse(const std::string& text);

  int num_qubits() const { return static_cast<int>(x_.size()); }
  const BitMask& x() const { return x_; }
  const BitMask& z() const { return z_; }
  /// Exponent e of the i^e prefactor, in [0, 4).
  int phase() const { return phase_; }
  std::complex<double> phase_value() const;

  char pauli_at(int q) const;
  BitMask support() const { return x_ | z_; }
  std::size_t weight() const { return support().count(); }
  bool commutes_with(const PauliTerm& other) const;

  /// "+XIZ"-style label, qubit 0 first.
  std::string str() const;

  friend bool operator==(const PauliTerm&, const PauliTerm&) = default;

 private:
  BitMask x_;
  BitMask z_;
  int phase_ = 0;
};

/// Exact product a·b with the phase tracked.
PauliTerm multiply(const PauliTerm& a, const PauliTerm& b);

/// Key of a Hermitian Pauli string inside a PauliSum: (x_mask, z_mask).
using PauliKey = std::pair<BitMask, BitMask>;

/// Real combination Σ c_P P of Hermitian Pauli strings (phase-free keys).
/// Entries with |c| <= kPruneTol are never stored.
class PauliSum {
 public:
  PauliSum() = default;
  explicit PauliSum(int n) : n_(n) {}

  /// From a Hermitian PauliTerm (even phase) with a real weight.
  static PauliSum from_term(const PauliTerm& term, double coeff = 1.0);
  /// ½(1 − Z_q), the projector onto |1⟩ of qubit q.
  static PauliSum excited_projector(int n, int q);
  /// Σ_q ½(1 − Z_q).
  static PauliSum non_interacting(int n);

  int num_qubits() const { return n_; }
  const std::map<PauliKey, double>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  double coefficient(const PauliKey& key) const;
  double coefficient(const std::string& label) const;

  /// Adds coeff · (x, z); merges with an existing entry and prunes.
  void add(const PauliKey& key, double coeff);
  /// Adds coeff · term. The term's phase times coeff must be real.
  void add(const PauliTerm& term, double coeff);

  /// Union of qubits carrying a non-identity Pauli in some stored entry.
  BitMask support() const;

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator-=(const PauliSum& other);
  PauliSum& operator*=(double s);
  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
  friend PauliSum operator*(PauliSum a, double s) { return a *= s; }

  /// Largest |coefficient difference| against another sum on the same qubits.
  double max_abs_diff(const PauliSum& other) const;

  std::string str() const;

 private:
  int n_ = 0;
  std::map<PauliKey, double> terms_;
};

/// Operator product of two Hermitian sums; the result must again be Hermitian
/// (e.g. squares, or products of commuting operators).
PauliSum product(const PauliSum& a, const PauliSum& b);

/// Accumulates complex-weighted Pauli strings and folds them back into a
/// Hermitian PauliSum. Imaginary residue above kPruneTol is an internal error.
class PauliAccumulator {
 public:
  explicit PauliAccumulator(int n) : n_(n) {}
  void add(const PauliTerm& term, std::complex<double> coeff);
  PauliSum finish() const;

 private:
  int n_;
  std::map<PauliKey, std::complex<double>> acc_;
};

/// e^{iθ Z_S} · op · e^{−iθ Z_S} with θ = angle_k·π/8.
PauliSum conjugate_by_phase_gate(const PauliSum& op, const std::vector<int>& support, int angle_k);
/// H^{⊗Q} · op · H^{⊗Q} for the listed qubits Q.
PauliSum conjugate_by_hadamard_layer(const PauliSum& op, const std::vector<int>& qubits);
/// CNOT · op · CNOT.
PauliSum conjugate_by_cnot(const PauliSum& op, int control, int target);

/// cos(k·π/4) and sin(k·π/4) with exact zeros and ±1.
std::pair<double, double> eighth_turn_cos_sin(int k);

template <typename Scalar = std::complex<double>>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

namespace detail {

inline void check_dense_cap(int n, int cap) {
  if (n > cap) {
    throw ResourceError("dense path needs " + std::to_string(n) + " qubits, cap is " + std::to_string(cap));
  }
}

template <typename Scalar>
Scalar i_power(int e) {
  using R = typename Scalar::value_type;
  switch (e & 3) {
    case 0: return Scalar(R(1), R(0));
    case 1: return Scalar(R(0), R(1));
    case 2: return Scalar(R(-1), R(0));
    default: return Scalar(R(0), R(-1));
  }
}

// Adds coeff · i^e · X^x Z^z into m, with x, z given as integers.
template <typename Scalar>
void add_pauli_dense(DenseMatrix<Scalar>& m, std::uint64_t x, std::uint64_t z, int e, Scalar coeff) {
  const std::uint64_t dim = static_cast<std::uint64_t>(m.rows());
  const Scalar base = coeff * i_power<Scalar>(e + std::popcount(x & z));
  for (std::uint64_t b = 0; b < dim; ++b) {
    const Scalar v = (std::popcount(z & b) & 1) ? -base : base;
    m(static_cast<Eigen::Index>(b ^ x), static_cast<Eigen::Index>(b)) += v;
  }
}

}  // namespace detail

/// Dense 2^n × 2^n matrix of a phased Pauli string; basis index bit q is qubit q.
template <typename Scalar = std::complex<double>>
DenseMatrix<Scalar> to_dense(const PauliTerm& p, int cap = dense_cap()) {
  const int n = p.num_qubits();
  detail::check_dense_cap(n, cap);
  const Eigen::Index dim = Eigen::Index{1} << n;
  DenseMatrix<Scalar> m = DenseMatrix<Scalar>::Zero(dim, dim);
  detail::add_pauli_dense<Scalar>(m, p.x().to_u64(), p.z().to_u64(), p.phase(), Scalar(1));
  return m;
}

/// Dense matrix of Σ c_P P.
template <typename Scalar = std::complex<double>>
DenseMatrix<Scalar> to_dense(const PauliSum& op, int cap = dense_cap()) {
  const int n = op.num_qubits();
  detail::check_dense_cap(n, cap);
  const Eigen::Index dim = Eigen::Index{1} << n;
  DenseMatrix<Scalar> m = DenseMatrix<Scalar>::Zero(dim, dim);
  for (const auto& [key, c] : op.terms()) {
    detail::add_pauli_dense<Scalar>(m, key.first.to_u64(), key.second.to_u64(), 0,
                                    Scalar(static_cast<typename Scalar::value_type>(c)));
  }
  return m;
}

}  // namespace gibbsforge
