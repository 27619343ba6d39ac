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

#include "gibbsforge/simulate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <thread>

namespace gibbsforge {

namespace {

void check_rate(double q, const char* what) {
  if (!(q >= 0.0 && q <= 1.0)) throw InputError(std::string(what) + " must lie in [0, 1], got " + std::to_string(q));
}

Eigen::VectorXd bernoulli_weights(int n, double q) {
  const std::uint64_t dim = std::uint64_t{1} << n;
  Eigen::VectorXd w(static_cast<Eigen::Index>(dim));
  for (std::uint64_t x = 0; x < dim; ++x) {
    const int hw = std::popcount(x);
    w(static_cast<Eigen::Index>(x)) = std::pow(q, hw) * std::pow(1.0 - q, n - hw);
  }
  return w;
}

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Counter-based stream: draw j of shot i is a hash of (seed, i, j), so no
// generator state is carried between shots.
class ShotStream {
 public:
  ShotStream(std::uint64_t seed, std::uint64_t shot) : key_(splitmix64(splitmix64(seed) ^ shot)) {}
  double uniform01() {
    const std::uint64_t bits = splitmix64(key_ + ++counter_ * 0xd1b54a32d192ed03ULL);
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

std::uint64_t draw_index(const Eigen::VectorXd& cdf, double u) {
  // First index with cdf > u; rounding can leave the total just below 1.
  const double* begin = cdf.data();
  const double* end = begin + cdf.size();
  const double* it = std::upper_bound(begin, end, u);
  if (it == end) {
    Eigen::Index last = cdf.size() - 1;
    while (last > 0 && cdf(last) == cdf(last - 1)) --last;
    return static_cast<std::uint64_t>(last);
  }
  return static_cast<std::uint64_t>(it - begin);
}

}  // namespace

NoiseSpec::NoiseSpec(double rate) : q(rate) { check_rate(rate, "bit-flip rate q"); }

Distribution Distribution::exact(int n, Eigen::VectorXd probs) {
  if (n < 0 || n > 30) throw InputError("exact distribution needs 0 <= n <= 30");
  if (probs.size() != (Eigen::Index{1} << n)) throw InputError("exact distribution has wrong length");
  for (Eigen::Index i = 0; i < probs.size(); ++i) {
    if (!std::isfinite(probs(i)) || probs(i) < -1e-12) throw InputError("exact distribution has a negative entry");
    if (probs(i) < 0) probs(i) = 0;
  }
  if (std::abs(probs.sum() - 1.0) > 1e-10) {
    throw InputError("exact distribution sums to " + std::to_string(probs.sum()));
  }
  Distribution d;
  d.n_ = n;
  d.kind_ = Kind::exact;
  d.probs_ = std::move(probs);
  return d;
}

Distribution Distribution::empirical(int n, std::map<std::uint64_t, std::uint64_t> counts) {
  if (n < 0 || n > 64) throw InputError("empirical distribution needs 0 <= n <= 64");
  Distribution d;
  d.n_ = n;
  d.kind_ = Kind::empirical;
  for (const auto& [s, c] : counts) {
    if (c == 0) throw InputError("empirical distribution has a zero count");
    if (n < 64 && (s >> n) != 0) throw InputError("sample has bits beyond n");
    d.shots_ += c;
  }
  if (d.shots_ == 0) throw InputError("empirical distribution has no shots");
  d.counts_ = std::move(counts);
  return d;
}

const Eigen::VectorXd& Distribution::probabilities() const {
  if (kind_ != Kind::exact) throw InputError("distribution is empirical");
  return probs_;
}

double Distribution::probability(std::uint64_t s) const {
  if (kind_ == Kind::exact) return probs_(static_cast<Eigen::Index>(s));
  auto it = counts_.find(s);
  return it == counts_.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(shots_);
}

Eigen::VectorXd Distribution::to_vector() const {
  if (kind_ == Kind::exact) return probs_;
  if (n_ > 30) throw ResourceError("dense table needs n <= 30");
  Eigen::VectorXd v = Eigen::VectorXd::Zero(Eigen::Index{1} << n_);
  for (const auto& [s, c] : counts_) v(static_cast<Eigen::Index>(s)) = static_cast<double>(c) / static_cast<double>(shots_);
  return v;
}

double l1_distance(const Distribution& a, const Distribution& b) {
  if (a.num_bits() != b.num_bits()) throw InputError("l1_distance: bit-length mismatch");
  if (a.is_exact() || b.is_exact()) return (a.to_vector() - b.to_vector()).lpNorm<1>();
  double total = 0;
  auto ia = a.counts().begin(), ib = b.counts().begin();
  while (ia != a.counts().end() || ib != b.counts().end()) {
    if (ib == b.counts().end() || (ia != a.counts().end() && ia->first < ib->first)) {
      total += a.probability(ia->first);
      ++ia;
    } else if (ia == a.counts().end() || ib->first < ia->first) {
      total += b.probability(ib->first);
      ++ib;
    } else {
      total += std::abs(a.probability(ia->first) - b.probability(ib->first));
      ++ia;
      ++ib;
    }
  }
  return total;
}

Distribution mix_over_inputs(const XProgram& program, const Eigen::VectorXd& input_weights, int cap) {
  validate(program);
  detail::check_dense_cap(program.n, cap);
  ColumnEvaluator<double> eval(program);
  if (input_weights.size() != eval.dim()) throw InputError("mix_over_inputs: weight vector has wrong length");
  Eigen::VectorXd p = Eigen::VectorXd::Zero(eval.dim());
  ComplexVector<double> col;
  for (Eigen::Index x = 0; x < eval.dim(); ++x) {
    const double w = input_weights(x);
    if (w == 0.0) continue;
    eval.column(static_cast<std::uint64_t>(x), col);
    p += w * col.cwiseAbs2();
  }
  return Distribution::exact(program.n, std::move(p));
}

Distribution gibbs_diagonal_spectral(const XProgram& program, double beta, int cap) {
  if (std::isnan(beta) || beta < 0) throw InputError("beta must be >= 0");
  validate(program);
  detail::check_dense_cap(program.n, cap);
  const int n = program.n;
  const std::uint64_t dim = std::uint64_t{1} << n;
  Eigen::VectorXd w = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim));
  if (std::isinf(beta)) {
    w(0) = 1.0;
  } else {
    const double z = partition_function(n, beta);
    for (std::uint64_t x = 0; x < dim; ++x) w(static_cast<Eigen::Index>(x)) = std::exp(-beta * std::popcount(x)) / z;
  }
  return mix_over_inputs(program, w, cap);
}

Eigen::VectorXd dense_spectrum(const ParentHamiltonian& h, int cap) {
  const auto m = to_dense(h.sum(), cap);
  Eigen::SelfAdjointEigenSolver<DenseMatrix<>> es(m, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw InternalError("eigendecomposition failed");
  return es.eigenvalues();
}

namespace {

Eigen::VectorXd boltzmann_weights(const Eigen::VectorXd& energies, double beta) {
  Eigen::VectorXd w(energies.size());
  for (Eigen::Index k = 0; k < energies.size(); ++k) {
    w(k) = std::isinf(beta) ? (energies(k) < 0.5 ? 1.0 : 0.0) : std::exp(-beta * energies(k));
  }
  return w;
}

}  // namespace

double dense_partition_function(const ParentHamiltonian& h, double beta, int cap) {
  if (std::isnan(beta) || beta < 0) throw InputError("beta must be >= 0");
  return boltzmann_weights(dense_spectrum(h, cap), beta).sum();
}

Distribution gibbs_diagonal_dense(const ParentHamiltonian& h, double beta, int cap) {
  if (std::isnan(beta) || beta < 0) throw InputError("beta must be >= 0");
  const auto m = to_dense(h.sum(), cap);
  Eigen::SelfAdjointEigenSolver<DenseMatrix<>> es(m);
  if (es.info() != Eigen::Success) throw InternalError("eigendecomposition failed");
  const Eigen::VectorXd w = boltzmann_weights(es.eigenvalues(), beta);
  // diag(V e^{−βΛ} V†)_s = Σ_k |V_sk|² e^{−βλ_k}
  Eigen::VectorXd diag = es.eigenvectors().cwiseAbs2() * w;
  diag /= w.sum();
  return Distribution::exact(h.n, std::move(diag));
}

Distribution noisy_circuit_exact(const XProgram& program, const NoiseSpec& noise, int cap) {
  validate(program);
  detail::check_dense_cap(program.n, cap);
  return mix_over_inputs(program, bernoulli_weights(program.n, noise.q), cap);
}

std::vector<std::uint64_t> sample_shots(const XProgram& program, const NoiseSpec& noise, std::uint64_t shots,
                                        std::uint64_t seed, unsigned threads, int cap) {
  validate(program);
  if (program.n > cap) {
    throw ResourceError("sampler needs " + std::to_string(program.n) + " qubits, cap is " + std::to_string(cap));
  }
  if (shots == 0) throw InputError("shots must be positive");
  const int n = program.n;
  ColumnEvaluator<double> eval(program);
  const Eigen::Index dim = eval.dim();

  // Small registers: one cumulative table per input mask, built up front.
  const bool tabulate = n <= 10;
  std::vector<Eigen::VectorXd> tables;
  auto cdf_of = [&](std::uint64_t x, ComplexVector<double>& col, Eigen::VectorXd& cdf) {
    eval.column(x, col);
    cdf.resize(dim);
    double acc = 0;
    for (Eigen::Index s = 0; s < dim; ++s) {
      acc += std::norm(col(s));
      cdf(s) = acc;
    }
  };
  if (tabulate) {
    tables.resize(static_cast<std::size_t>(dim));
    ComplexVector<double> col;
    for (Eigen::Index x = 0; x < dim; ++x) cdf_of(static_cast<std::uint64_t>(x), col, tables[x]);
  }

  std::vector<std::uint64_t> out(shots);
  auto run = [&](std::uint64_t begin, std::uint64_t end) {
    ComplexVector<double> col;
    Eigen::VectorXd cdf;
    for (std::uint64_t shot = begin; shot < end; ++shot) {
      ShotStream rng(seed, shot);
      std::uint64_t mask = 0;
      for (int q = 0; q < n; ++q) {
        if (rng.uniform01() < noise.q) mask |= std::uint64_t{1} << q;
      }
      const double u = rng.uniform01();
      if (tabulate) {
        out[shot] = draw_index(tables[mask], u);
      } else {
        cdf_of(mask, col, cdf);
        out[shot] = draw_index(cdf, u);
      }
    }
  };

  unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, shots));
  if (workers <= 1) {
    run(0, shots);
    return out;
  }
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (shots + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = w * chunk, end = std::min(shots, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back(run, begin, end);
  }
  for (auto& t : pool) t.join();
  return out;
}

Distribution noisy_circuit_sample(const XProgram& program, const NoiseSpec& noise, std::uint64_t shots,
                                  std::uint64_t seed, unsigned threads, int cap) {
  std::map<std::uint64_t, std::uint64_t> counts;
  for (auto s : sample_shots(program, noise, shots, seed, threads, cap)) ++counts[s];
  return Distribution::empirical(program.n, std::move(counts));
}

double compose_bitflip(double p, double q) {
  check_rate(p, "bit-flip rate p");
  check_rate(q, "bit-flip rate q");
  return p * (1.0 - q) + q * (1.0 - p);
}

double q_of_beta(double beta) {
  if (std::isnan(beta) || beta < 0) throw InputError("beta must be >= 0");
  if (std::isinf(beta)) return 0.0;
  const double e = std::exp(-beta);
  return e / (1.0 + e);
}

double beta_of_q(double q) {
  if (!(q > 0.0 && q <= 0.5)) throw InputError("q must lie in (0, 1/2] to define beta, got " + std::to_string(q));
  return std::log1p(-q) - std::log(q);
}

Distribution apply_bitflip(const Distribution& dist, double q) {
  check_rate(q, "bit-flip rate q");
  Eigen::VectorXd p = dist.to_vector();
  const Eigen::Index dim = p.size();
  for (int bit = 0; bit < dist.num_bits(); ++bit) {
    const Eigen::Index step = Eigen::Index{1} << bit;
    for (Eigen::Index s = 0; s < dim; ++s) {
      if (s & step) continue;
      const double a = p(s), b = p(s | step);
      p(s) = (1.0 - q) * a + q * b;
      p(s | step) = q * a + (1.0 - q) * b;
    }
  }
  return Distribution::exact(dist.num_bits(), std::move(p));
}

MeasuredGibbs measured_gibbs_equivalence(const XProgram& program, double beta, double q_meas, int cap) {
  if (!program.cnot_prefix.empty()) {
    throw InputError("measured_gibbs_equivalence: readout noise only folds into beta for programs without a CNOT prefix");
  }
  const double q_prime = compose_bitflip(q_of_beta(beta), q_meas);
  if (q_prime > 0.5) throw InputError("composed bit-flip rate exceeds 1/2; beta' is undefined");
  const double beta_prime = q_prime == 0.0 ? INFINITY : beta_of_q(q_prime);
  Distribution measured = apply_bitflip(gibbs_diagonal_spectral(program, beta, cap), q_meas);
  const double dev = l1_distance(measured, gibbs_diagonal_spectral(program, beta_prime, cap));
  return {beta_prime, std::move(measured), dev};
}

}  // namespace gibbsforge
