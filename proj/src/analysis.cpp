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

#include "gibbsforge/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>

namespace gibbsforge {

ThresholdReport hardness_threshold() {
  ThresholdReport r;
  r.beta_star = std::log((1.0 - r.q_star) / r.q_star);
  r.round_trip_error = q_of_beta(r.beta_star) - r.q_star;
  r.beta_star_in_range = r.beta_star >= 1.86 && r.beta_star <= 1.87;
  return r;
}

MeasurementThreshold measurement_threshold(double beta, double q_meas) {
  MeasurementThreshold m;
  m.q_gibbs = q_of_beta(beta);
  m.q_prime = compose_bitflip(m.q_gibbs, q_meas);
  m.beta_prime = m.q_prime > 0.0 && m.q_prime <= 0.5 ? beta_of_q(m.q_prime)
                 : m.q_prime == 0.0                  ? std::numeric_limits<double>::infinity()
                                                     : std::numeric_limits<double>::quiet_NaN();
  m.hard = m.q_prime <= kHardnessQ;
  return m;
}

PostselectResult postselect_gap(const Distribution& p, const Distribution& p_prime, int decision_bit,
                                std::uint64_t postselect_mask, double delta) {
  if (p.num_bits() != p_prime.num_bits()) throw InputError("postselect_gap: bit-length mismatch");
  if (decision_bit < 0 || decision_bit >= p.num_bits()) throw InputError("postselect_gap: decision bit out of range");
  if ((postselect_mask >> decision_bit) & 1u) throw InputError("postselect_gap: decision bit inside the register");
  if (!(delta > 0.0 && delta < 0.5)) throw InputError("postselect_gap: delta must lie in (0, 1/2)");
  const Eigen::VectorXd a = p.to_vector(), b = p_prime.to_vector();
  PostselectResult r;
  r.l1 = (a - b).lpNorm<1>();
  double joint = 0, joint_prime = 0;
  for (Eigen::Index s = 0; s < a.size(); ++s) {
    if (static_cast<std::uint64_t>(s) & postselect_mask) continue;
    r.p_post += a(s);
    r.p_prime_post += b(s);
    if ((s >> decision_bit) & 1) {
      joint += a(s);
      joint_prime += b(s);
    }
  }
  if (r.p_post <= 0.0) throw InputError("postselect_gap: P(y=0) = 0, conditional undefined");
  r.cond = joint / r.p_post;
  r.premise_bound = delta / (2.0 + delta) * r.p_post;
  r.premise_ok = r.l1 < r.premise_bound;
  if (r.p_prime_post > 0.0) {
    r.cond_prime = joint_prime / r.p_prime_post;
    r.gap = std::abs(r.cond_prime - r.cond);
    r.conclusion_ok = r.gap < delta;
  } else {
    r.cond_prime = std::numeric_limits<double>::quiet_NaN();
    r.gap = std::numeric_limits<double>::infinity();
    r.conclusion_ok = false;
  }
  return r;
}

double tvd_budget(int n, double q) {
  if (n < 0) throw InputError("tvd_budget: n must be >= 0");
  if (!(q >= 0.0 && q <= 1.0)) throw InputError("tvd_budget: q must lie in [0, 1]");
  return std::pow(1.0 - q, n) * std::ldexp(1.0, -6 * n - 4) / 5.0;
}

double prep_epsilon(int n, double beta) {
  if (n < 0) throw InputError("prep_epsilon: n must be >= 0");
  return std::pow(1.0 + std::exp(-beta), -n) * std::ldexp(1.0, -6 * n - 4) / 9.0;
}

RuntimeEstimate prep_runtime(int n, int depth, int locality, double beta, double epsilon) {
  if (n < 1 || depth < 0 || locality < 0 || beta < 0 || !(epsilon > 0)) {
    throw InputError("prep_runtime: needs n >= 1, d, l, beta >= 0 and epsilon > 0");
  }
  RuntimeEstimate est;
  est.exponential_factor = std::ldexp(1.0, 4 * locality + depth) * std::exp(beta) * n;
  est.poly_factor = std::log(n / epsilon) + locality + beta;
  est.total = est.exponential_factor * est.poly_factor;
  return est;
}

namespace {

DenseMatrix<> gibbs_state(const DenseMatrix<>& h) {
  Eigen::SelfAdjointEigenSolver<DenseMatrix<>> es(h);
  if (es.info() != Eigen::Success) throw InternalError("eigendecomposition failed");
  const Eigen::VectorXd& lam = es.eigenvalues();
  Eigen::VectorXd w = (-(lam.array() - lam.minCoeff())).exp();
  w /= w.sum();
  return es.eigenvectors() * w.cast<std::complex<double>>().asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

PerturbationCheck gibbs_perturbation_check(const DenseMatrix<>& h1, const DenseMatrix<>& h2) {
  if (h1.rows() != h1.cols() || h1.rows() != h2.rows() || h2.rows() != h2.cols()) {
    throw InputError("gibbs_perturbation_check: shape mismatch");
  }
  PerturbationCheck c;
  const DenseMatrix<> diff_state = gibbs_state(h1) - gibbs_state(h2);
  Eigen::SelfAdjointEigenSolver<DenseMatrix<>> es_state(diff_state, Eigen::EigenvaluesOnly);
  c.lhs = es_state.eigenvalues().cwiseAbs().sum();
  Eigen::SelfAdjointEigenSolver<DenseMatrix<>> es_h(h1 - h2, Eigen::EigenvaluesOnly);
  const double norm = es_h.eigenvalues().cwiseAbs().maxCoeff();
  c.rhs = 2.0 * std::expm1(norm);
  c.ok = c.lhs <= c.rhs + 1e-12;
  return c;
}

PerturbationCheck gibbs_perturbation_check(const PauliSum& h1, const PauliSum& h2, int cap) {
  if (h1.num_qubits() != h2.num_qubits()) throw InputError("gibbs_perturbation_check: size mismatch");
  return gibbs_perturbation_check(to_dense(h1, cap), to_dense(h2, cap));
}

CoshPoint cosh_bound_at(double x) {
  const double rhs = std::exp(x * x / 20.0);
  return {x, std::cosh(x) - rhs, std::cosh(x / 2.0) - rhs, std::abs(x) <= kCoshDomain};
}

CoshScan cosh_bound_check(double grid_step) {
  if (!(grid_step > 0.0)) throw InputError("cosh_bound_check: grid step must be positive");
  CoshScan scan;
  scan.stated_min_margin = scan.chain_min_margin = std::numeric_limits<double>::infinity();
  const auto steps = static_cast<long>(std::floor(2.0 * kCoshDomain / grid_step + 1e-9));
  // The right endpoint is appended when the grid stops short of it.
  const bool add_endpoint = kCoshDomain - (-kCoshDomain + steps * grid_step) > 1e-12;
  for (long i = 0; i <= steps + (add_endpoint ? 1 : 0); ++i) {
    const double x = i <= steps ? -kCoshDomain + i * grid_step : kCoshDomain;
    const CoshPoint pt = cosh_bound_at(x);
    ++scan.points;
    if (pt.stated_margin < scan.stated_min_margin) {
      scan.stated_min_margin = pt.stated_margin;
      scan.stated_argmin = x;
    }
    if (pt.chain_margin < scan.chain_min_margin) {
      scan.chain_min_margin = pt.chain_margin;
      scan.chain_argmin = x;
    }
  }
  // Equality at x = 0 counts as holding.
  scan.stated_holds = scan.stated_min_margin >= -1e-15;
  scan.chain_holds = scan.chain_min_margin >= -1e-15;
  return scan;
}

bool PFailChain::ordered(double rel_tol) const {
  auto le = [&](double a, double b) { return a <= b * (1.0 + rel_tol) + 1e-300; };
  return le(exact, fraction) && le(fraction, cosh) && le(cosh, exp100);
}

PFailChain p_fail_chain(double beta, int delta) {
  if (delta < 5) throw InputError("p_fail_chain: degree must be >= 5");
  if (std::isnan(beta) || beta < 0) throw InputError("p_fail_chain: beta must be >= 0");
  PFailChain c;
  c.q = q_of_beta(beta);
  c.repetitions = delta / 5.0;
  c.exact = std::pow(4.0 * c.q * (1.0 - c.q), c.repetitions / 2.0);
  const double e = std::exp(-beta);
  c.fraction = std::pow(4.0 * e / ((1.0 + e) * (1.0 + e)), delta / 10.0);
  c.cosh = std::pow(std::cosh(beta / 2.0), -delta / 5.0);
  c.exp100 = std::exp(-beta * beta * delta / 100.0);
  c.exp40 = std::exp(-beta * beta * delta / 40.0);
  return c;
}

namespace {

// Smallest β in [0, ∞) with f(β) < target, for f decreasing in β.
double bisect_below(const std::function<double(double)>& f, double target) {
  double lo = 0.0, hi = 1.0;
  while (f(hi) >= target) {
    hi *= 2.0;
    if (hi > 1e6) throw InternalError("frontier bisection did not bracket");
  }
  while (hi - lo > 1e-7) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < target ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace

Frontier degree_frontier(int delta) {
  if (delta < 5) throw InputError("degree_frontier: degree must be >= 5");
  Frontier fr;
  fr.beta_exact = bisect_below([&](double b) { return p_fail_chain(b, delta).exact; }, kHardnessQ);
  fr.beta_exp100 = bisect_below([&](double b) { return p_fail_chain(b, delta).exp100; }, kHardnessQ);
  fr.beta_exp40 = bisect_below([&](double b) { return p_fail_chain(b, delta).exp40; }, kHardnessQ);
  fr.beta_closed_form = 2.0 * std::acosh(std::pow(kHardnessQ, -5.0 / delta));
  return fr;
}

}  // namespace gibbsforge
