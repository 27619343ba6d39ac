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
#include <cstdint>
#include <map>
#include <vector>

#include "gibbsforge/circuit.hpp"
#include "gibbsforge/hamiltonian.hpp"

namespace gibbsforge {

/// Independent bit-flip with probability q on every qubit.
struct NoiseSpec {
  double q = 0.0;

  explicit NoiseSpec(double rate);
};

/// Probability table over n-bit strings (index bit i = qubit i), or a sample
/// tally with its shot count.
class Distribution {
 public:
  enum class Kind { exact, empirical };

  /// Entries must be >= -1e-12 (tiny negatives are clamped) and sum to 1 within 1e-10.
  static Distribution exact(int n, Eigen::VectorXd probs);
  static Distribution empirical(int n, std::map<std::uint64_t, std::uint64_t> counts);

  int num_bits() const { return n_; }
  Kind kind() const { return kind_; }
  bool is_exact() const { return kind_ == Kind::exact; }

  const Eigen::VectorXd& probabilities() const;
  const std::map<std::uint64_t, std::uint64_t>& counts() const { return counts_; }
  std::uint64_t shots() const { return shots_; }

  /// Exact probability, or empirical frequency.
  double probability(std::uint64_t s) const;
  /// Dense table of probabilities or frequencies.
  Eigen::VectorXd to_vector() const;

 private:
  int n_ = 0;
  Kind kind_ = Kind::exact;
  Eigen::VectorXd probs_;
  std::map<std::uint64_t, std::uint64_t> counts_;
  std::uint64_t shots_ = 0;
};

/// Σ_s |P(s) − Q(s)| (no ½ factor).
double l1_distance(const Distribution& a, const Distribution& b);

/// Σ_x w(x) |⟨s|C|x⟩|² for input weights w over 2^n basis states.
Distribution mix_over_inputs(const XProgram& program, const Eigen::VectorXd& input_weights, int cap = dense_cap());

/// (1/Z) Σ_x e^{−β·HW(x)} |⟨s|C|x⟩|², Z = (1 + e^{−β})^n. β = +inf gives P_C.
Distribution gibbs_diagonal_spectral(const XProgram& program, double beta, int cap = dense_cap());

inline constexpr int kDenseGibbsCap = 10;

/// Diagonal of e^{−βH}/tr e^{−βH} from an eigendecomposition of the dense sum.
Distribution gibbs_diagonal_dense(const ParentHamiltonian& h, double beta, int cap = kDenseGibbsCap);

/// Ascending eigenvalues of the dense sum of terms.
Eigen::VectorXd dense_spectrum(const ParentHamiltonian& h, int cap = kDenseGibbsCap);
/// tr e^{−βH} from the dense spectrum.
double dense_partition_function(const ParentHamiltonian& h, double beta, int cap = kDenseGibbsCap);

/// Σ_x q^{HW(x)} (1−q)^{n−HW(x)} |⟨s|C|x⟩|².
Distribution noisy_circuit_exact(const XProgram& program, const NoiseSpec& noise, int cap = dense_cap());

/// One sample per shot. Shot i draws from a counter-based stream keyed by (seed, i),
/// so the sequence does not depend on `threads`.
std::vector<std::uint64_t> sample_shots(const XProgram& program, const NoiseSpec& noise, std::uint64_t shots,
                                        std::uint64_t seed, unsigned threads = 0, int cap = kSamplerCap);

Distribution noisy_circuit_sample(const XProgram& program, const NoiseSpec& noise, std::uint64_t shots,
                                  std::uint64_t seed, unsigned threads = 0, int cap = kSamplerCap);

/// Rate of D_q ∘ D_p: p(1−q) + q(1−p).
double compose_bitflip(double p, double q);

/// q = e^{−β}/(1 + e^{−β}); β >= 0, +inf maps to 0.
double q_of_beta(double beta);
/// β = ln((1−q)/q) for q in (0, ½].
double beta_of_q(double q);

/// Classical D_q^{⊗n} on an exact distribution: every bit flips independently.
Distribution apply_bitflip(const Distribution& dist, double q);

struct MeasuredGibbs {
  double beta_prime = 0.0;
  /// D_{q_meas}^{⊗n} applied to the Gibbs diagonal at β.
  Distribution measured;
  /// L1 distance from the Gibbs diagonal at β′.
  double deviation = 0.0;
};

/// Readout noise on the Gibbs diagonal folds into a new inverse temperature.
/// Needs an empty CNOT prefix: only then do output bit-flips commute to the input.
MeasuredGibbs measured_gibbs_equivalence(const XProgram& program, double beta, double q_meas, int cap = dense_cap());

}  // namespace gibbsforge
