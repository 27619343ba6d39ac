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

// Reference constructions for the tests. These build every matrix entry by
// entry from single-qubit factors and explicit gate products, sharing no code
// with the library's bit-mask kernels.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gibbsforge/circuit.hpp"

namespace oracle {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Mat2 = Eigen::Matrix2cd;

inline Mat2 pauli2(char c) {
  Mat2 m;
  switch (c) {
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, cd(0, -1), cd(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: m.setIdentity();
  }
  return m;
}

// ⊗_q factors[q], with qubit q on bit q of the basis index.
inline Mat tensor(const std::vector<Mat2>& factors) {
  const int n = static_cast<int>(factors.size());
  const Eigen::Index dim = Eigen::Index{1} << n;
  Mat out(dim, dim);
  for (Eigen::Index a = 0; a < dim; ++a) {
    for (Eigen::Index b = 0; b < dim; ++b) {
      cd v = 1.0;
      for (int q = 0; q < n; ++q) v *= factors[static_cast<std::size_t>(q)]((a >> q) & 1, (b >> q) & 1);
      out(a, b) = v;
    }
  }
  return out;
}

// "+XIZ" / "-iY_Z" style label, character q acting on qubit q.
inline Mat pauli_label(const std::string& label) {
  cd phase = 1.0;
  std::size_t pos = 0;
  if (pos < label.size() && (label[pos] == '+' || label[pos] == '-')) {
    if (label[pos] == '-') phase = -1.0;
    ++pos;
  }
  if (pos < label.size() && label[pos] == 'i') {
    phase *= cd(0, 1);
    ++pos;
  }
  std::vector<Mat2> f;
  for (; pos < label.size(); ++pos) f.push_back(pauli2(label[pos]));
  return phase * tensor(f);
}

inline Mat hadamard_all(int n) {
  Mat2 h;
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  return tensor(std::vector<Mat2>(static_cast<std::size_t>(n), h));
}

// e^{iθ Z_S} as an explicit diagonal with θ = k·π/8.
inline Mat phase_gate(int n, const std::vector<int>& support, int k) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  const double theta = k * M_PI / 8;
  Mat d = Mat::Zero(dim, dim);
  for (Eigen::Index y = 0; y < dim; ++y) {
    int parity = 0;
    for (int q : support) parity ^= (y >> q) & 1;
    d(y, y) = std::polar(1.0, parity ? -theta : theta);
  }
  return d;
}

inline Mat cnot(int n, int c, int t) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Mat m = Mat::Zero(dim, dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    const Eigen::Index a = (b >> c) & 1 ? b ^ (Eigen::Index{1} << t) : b;
    m(a, b) = 1;
  }
  return m;
}

// H^{⊗n} · Π_m e^{iθ_m Z_{S_m}} · H^{⊗n} · CNOT_last ⋯ CNOT_first.
inline Mat unitary(const gibbsforge::XProgram& p) {
  const Eigen::Index dim = Eigen::Index{1} << p.n;
  Mat d = Mat::Identity(dim, dim);
  for (const auto& m : p.monomials) d = phase_gate(p.n, m.qubits, m.k) * d;
  Mat b = Mat::Identity(dim, dim);
  for (const auto& [c, t] : p.cnot_prefix) b = cnot(p.n, c, t) * b;
  const Mat h = hadamard_all(p.n);
  return h * d * h * b;
}

// Σ_x q^{|x|}(1−q)^{n−|x|} |⟨s|U|x⟩|² by direct summation.
inline Eigen::VectorXd noisy_output(const Mat& u, int n, double q) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::VectorXd out = Eigen::VectorXd::Zero(dim);
  for (Eigen::Index x = 0; x < dim; ++x) {
    int w = 0;
    for (int i = 0; i < n; ++i) w += (x >> i) & 1;
    const double weight = std::pow(q, w) * std::pow(1 - q, n - w);
    for (Eigen::Index s = 0; s < dim; ++s) out(s) += weight * std::norm(u(s, x));
  }
  return out;
}

// e^{−βH}/tr via eigendecomposition, diagonal only.
inline Eigen::VectorXd gibbs_diagonal(const Mat& h, double beta) {
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  const Eigen::VectorXd w = (-beta * (es.eigenvalues().array() - es.eigenvalues().minCoeff())).exp();
  const Mat rho = es.eigenvectors() * w.cast<cd>().asDiagonal() * es.eigenvectors().adjoint();
  return rho.diagonal().real() / w.sum();
}

inline double binomial_tail(double q, int r, double tie_weight) {
  double total = 0;
  for (int k = 0; k <= r; ++k) {
    const double term = std::tgamma(r + 1.0) / (std::tgamma(k + 1.0) * std::tgamma(r - k + 1.0)) *
                        std::pow(q, k) * std::pow(1 - q, r - k);
    if (2 * k > r) total += term;
    if (2 * k == r) total += tie_weight * term;
  }
  return total;
}

}  // namespace oracle
