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
#include <vector>

#include "gibbsforge/pauli.hpp"
#include "gibbsforge/simulate.hpp"

namespace gibbsforge {

/// Bit-flip threshold below which the 3D family stays hard to sample.
inline constexpr double kHardnessQ = 0.134;
/// Half-width of the interval on which the cosh inequality is claimed.
inline constexpr double kCoshDomain = 2.6;

struct ThresholdReport {
  double q_star = kHardnessQ;
  double beta_star = 0.0;
  /// q_of_beta(beta_star) − q_star.
  double round_trip_error = 0.0;
  bool beta_star_in_range = false;
};

/// β* = ln((1 − q*)/q*) with q* = 0.134; expected in [1.86, 1.87].
ThresholdReport hardness_threshold();

struct MeasurementThreshold {
  double q_gibbs = 0.0;
  double q_prime = 0.0;
  double beta_prime = 0.0;
  /// q′ <= q*: readout noise keeps the effective temperature in the hard region.
  bool hard = false;
};

MeasurementThreshold measurement_threshold(double beta, double q_meas);

struct PostselectResult {
  double l1 = 0.0;
  double p_post = 0.0;        // P(y = 0)
  double p_prime_post = 0.0;  // P′(y = 0)
  double cond = 0.0;          // P(x = 1 | y = 0)
  double cond_prime = 0.0;    // P′(x = 1 | y = 0), NaN when P′(y = 0) = 0
  double gap = 0.0;
  double premise_bound = 0.0;  // δ/(2 + δ) · P(y = 0)
  bool premise_ok = false;
  bool conclusion_ok = false;
};

/// Compares conditionals on the decision bit given an all-zero postselection
/// register. Throws InputError when P(y = 0) = 0 or δ is outside (0, ½).
PostselectResult postselect_gap(const Distribution& p, const Distribution& p_prime, int decision_bit,
                                std::uint64_t postselect_mask, double delta);

/// (1 − q)^n · 2^{−6n−4} / 5.
double tvd_budget(int n, double q);

/// (1/9) · (1 + e^{−β})^{−n} · 2^{−6n−4}.
double prep_epsilon(int n, double beta);

/// Order-of-magnitude cost 2^{4ℓ} 2^d e^β n · poly(log(n/ε), ℓ, β) with the
/// polynomial taken as the plain sum log(n/ε) + ℓ + β. Not a timing model.
struct RuntimeEstimate {
  double exponential_factor = 0.0;
  double poly_factor = 0.0;
  double total = 0.0;
};

RuntimeEstimate prep_runtime(int n, int depth, int locality, double beta, double epsilon);

struct PerturbationCheck {
  double lhs = 0.0;  // ‖ρ(H1) − ρ(H2)‖₁
  double rhs = 0.0;  // 2(e^{‖H1 − H2‖} − 1)
  bool ok = false;
};

/// Trace-norm distance of e^{−H}/tr against its bound. `ok` allows 1e-12 of
/// floating-point slack.
PerturbationCheck gibbs_perturbation_check(const DenseMatrix<>& h1, const DenseMatrix<>& h2);
PerturbationCheck gibbs_perturbation_check(const PauliSum& h1, const PauliSum& h2, int cap = 8);

struct CoshPoint {
  double x = 0.0;
  double stated_margin = 0.0;  // cosh(x) − e^{x²/20}
  double chain_margin = 0.0;   // cosh(x/2) − e^{x²/20}
  bool in_domain = false;      // |x| <= 2.6
};

CoshPoint cosh_bound_at(double x);

struct CoshScan {
  std::size_t points = 0;
  double stated_min_margin = 0.0;
  double chain_min_margin = 0.0;
  double stated_argmin = 0.0;
  double chain_argmin = 0.0;
  bool stated_holds = false;
  bool chain_holds = false;
};

/// Scans x over [−2.6, 2.6] with the given step (endpoints included).
CoshScan cosh_bound_check(double grid_step);

/// The successive upper bounds on the logical failure rate, with r = Δ/5.
struct PFailChain {
  double q = 0.0;
  double repetitions = 0.0;
  double exact = 0.0;     // (4q(1−q))^{r/2}
  double fraction = 0.0;  // (4 e^{−β} / (1 + e^{−β})²)^{Δ/10}
  double cosh = 0.0;      // cosh(β/2)^{−Δ/5}
  double exp100 = 0.0;    // e^{−β²Δ/100}
  double exp40 = 0.0;     // e^{−β²Δ/40}, the form used for the final condition

  /// exact <= fraction <= cosh <= exp100, with relative slack rel_tol.
  bool ordered(double rel_tol = 1e-12) const;
};

PFailChain p_fail_chain(double beta, int delta);

struct Frontier {
  double beta_exact = 0.0;        // bisection on `exact` < 0.134
  double beta_closed_form = 0.0;  // 2·acosh(0.134^{−5/Δ})
  double beta_exp100 = 0.0;
  double beta_exp40 = 0.0;
};

/// Smallest β with the corresponding bound below 0.134, to 1e-6.
Frontier degree_frontier(int delta);

}  // namespace gibbsforge
