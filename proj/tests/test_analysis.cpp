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

#include <random>

#include "gtest/gtest.h"
#include "oracle.hpp"

using namespace gibbsforge;

namespace {

// P(bit 0 = 1 | masked bits all zero), evaluated directly.
double conditional(const Eigen::VectorXd& p, std::uint64_t mask) {
  double joint = 0, marg = 0;
  for (Eigen::Index s = 0; s < p.size(); ++s) {
    if (static_cast<std::uint64_t>(s) & mask) continue;
    marg += p(s);
    if (s & 1) joint += p(s);
  }
  return joint / marg;
}

Eigen::VectorXd simplex(Eigen::Index size, std::mt19937_64& rng, double floor = 0.0) {
  std::uniform_real_distribution<double> u(floor, 1.0);
  Eigen::VectorXd v(size);
  for (auto& x : v) x = u(rng);
  return v / v.sum();
}

oracle::Mat hermitian(int dim, std::mt19937_64& rng, double scale) {
  std::normal_distribution<double> g;
  oracle::Mat a(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) a(i, j) = {g(rng), g(rng)};
  }
  return (a + a.adjoint()) * (0.5 * scale);
}

// ‖e^{−A}/tr − e^{−B}/tr‖₁ through a second, independent eigensolver pass.
double trace_distance(const oracle::Mat& a, const oracle::Mat& b) {
  auto state = [](const oracle::Mat& h) {
    Eigen::ComplexEigenSolver<oracle::Mat> es(h);
    const Eigen::VectorXd lam = es.eigenvalues().real();
    const Eigen::VectorXd w = (-(lam.array() - lam.minCoeff())).exp();
    const oracle::Mat v = es.eigenvectors();
    return oracle::Mat(v * (w / w.sum()).cast<std::complex<double>>().asDiagonal() * v.inverse());
  };
  const oracle::Mat d = state(a) - state(b);
  Eigen::JacobiSVD<oracle::Mat> svd(d);
  return svd.singularValues().sum();
}

}  // namespace

TEST(analysis, hardness_threshold) {
  const ThresholdReport r = hardness_threshold();
  EXPECT_DOUBLE_EQ(r.q_star, 0.134);
  EXPECT_NEAR(r.beta_star, std::log(0.866 / 0.134), 1e-15);
  EXPECT_GE(r.beta_star, 1.86);
  EXPECT_LE(r.beta_star, 1.87);
  EXPECT_LE(std::abs(r.round_trip_error), 1e-12);
  EXPECT_TRUE(r.beta_star_in_range);
}

TEST(analysis, measurement_threshold) {
  const MeasurementThreshold m = measurement_threshold(3.0, 0.05);
  EXPECT_NEAR(m.q_gibbs, 0.047426, 1e-6);
  EXPECT_NEAR(m.q_prime, 0.092683, 1e-6);
  EXPECT_TRUE(m.hard);
  EXPECT_FALSE(measurement_threshold(1.5, 0.05).hard);
  EXPECT_DOUBLE_EQ(measurement_threshold(2.0, 0.0).beta_prime, 2.0);
}

TEST(analysis, postselect_identical_distributions) {
  const Distribution p = Distribution::exact(3, Eigen::VectorXd::Constant(8, 0.125));
  for (double delta : {0.01, 0.2, 0.49}) {
    const PostselectResult r = postselect_gap(p, p, 0, 0b110, delta);
    EXPECT_EQ(r.gap, 0.0);
    EXPECT_TRUE(r.premise_ok);
    EXPECT_TRUE(r.conclusion_ok);
    EXPECT_DOUBLE_EQ(r.cond, 0.5);
  }
}

TEST(analysis, postselect_random_premise_satisfying) {
  std::mt19937_64 rng(2718);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 1000; ++t) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const std::uint64_t mask = ((rng() % ((1u << (n - 1)) - 1)) + 1) << 1;
    const Eigen::VectorXd p = simplex(Eigen::Index{1} << n, rng, 0.02);
    const Eigen::VectorXd noise = simplex(p.size(), rng);
    double post = 0;
    for (Eigen::Index s = 0; s < p.size(); ++s) post += (static_cast<std::uint64_t>(s) & mask) ? 0.0 : p(s);
    const double delta = 0.3;
    const double mix = std::min(1.0, 0.999 * u(rng) * delta / (2 + delta) * post / (noise - p).lpNorm<1>());
    const Eigen::VectorXd q = (1 - mix) * p + mix * noise;
    const PostselectResult r =
        postselect_gap(Distribution::exact(n, p), Distribution::exact(n, q), 0, mask, delta);
    ASSERT_TRUE(r.premise_ok) << t;
    ASSERT_NEAR(r.gap, std::abs(conditional(q, mask) - conditional(p, mask)), 1e-12);
    ASSERT_LT(r.gap, delta) << t;
  }
}

TEST(analysis, postselect_premise_violation_reported) {
  const Distribution p = Distribution::exact(2, Eigen::Vector4d(0.4, 0.1, 0.4, 0.1));
  const Distribution q = Distribution::exact(2, Eigen::Vector4d(0.1, 0.4, 0.1, 0.4));
  const PostselectResult r = postselect_gap(p, q, 0, 0b10, 0.3);
  EXPECT_FALSE(r.premise_ok);
  EXPECT_NEAR(r.l1, 1.2, 1e-15);
  const Distribution zero_post = Distribution::exact(2, Eigen::Vector4d(0, 0, 0.5, 0.5));
  EXPECT_THROW(postselect_gap(zero_post, p, 0, 0b10, 0.3), InputError);
  EXPECT_THROW(postselect_gap(p, p, 0, 0b10, 0.6), InputError);
  EXPECT_THROW(postselect_gap(p, p, 1, 0b10, 0.3), InputError);
}

TEST(analysis, tvd_budget_values) {
  EXPECT_NEAR(tvd_budget(2, 0.25), 0.75 * 0.75 * std::pow(2.0, -16) / 5, 1e-20);
  EXPECT_NEAR(tvd_budget(2, 0.25), 1.7166e-6, 1e-10);
  EXPECT_DOUBLE_EQ(tvd_budget(3, 0.0), std::pow(2.0, -22) / 5);
  EXPECT_DOUBLE_EQ(tvd_budget(0, 0.3), 0.0125);
}

TEST(analysis, prep_formulas) {
  EXPECT_DOUBLE_EQ(prep_epsilon(1, 0.0), (1.0 / 9) * 0.5 * std::pow(2.0, -10));
  const RuntimeEstimate base = prep_runtime(16, 3, 2, 1.0, 1e-4);
  const RuntimeEstimate halved = prep_runtime(16, 3, 2, 1.0, 5e-5);
  EXPECT_LT(halved.total / base.total, 1.1);
  EXPECT_GT(halved.total, base.total);
  EXPECT_DOUBLE_EQ(prep_runtime(16, 3, 3, 1.0, 1e-4).exponential_factor / base.exponential_factor, 16.0);
  EXPECT_THROW(prep_runtime(16, 3, 2, 1.0, 0.0), InputError);
}

TEST(analysis, perturbation_trivial_cases) {
  std::mt19937_64 rng(1);
  const oracle::Mat h = hermitian(8, rng, 1.0);
  const PerturbationCheck same = gibbs_perturbation_check(h, h);
  EXPECT_EQ(same.lhs, 0.0);
  EXPECT_EQ(same.rhs, 0.0);
  EXPECT_TRUE(same.ok);
  const oracle::Mat shifted = h + 0.3 * oracle::Mat::Identity(8, 8);
  const PerturbationCheck gauge = gibbs_perturbation_check(h, shifted);
  EXPECT_LT(gauge.lhs, 1e-12);
  EXPECT_NEAR(gauge.rhs, 2 * std::expm1(0.3), 1e-12);
}

TEST(analysis, perturbation_bound_random_pairs) {
  std::mt19937_64 rng(161);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 1000; ++t) {
    const int dim = 2 + static_cast<int>(rng() % 15);
    const oracle::Mat a = hermitian(dim, rng, 2.0 * u(rng));
    const oracle::Mat b = a + hermitian(dim, rng, std::pow(10.0, -2.0 * u(rng)));
    const PerturbationCheck c = gibbs_perturbation_check(a, b);
    ASSERT_TRUE(c.ok) << t;
    if (t % 50 == 0) {
      ASSERT_NEAR(c.lhs, trace_distance(a, b), 1e-9);
    }
  }
}

TEST(analysis, perturbation_on_pauli_sums) {
  const PauliSum h1 = PauliSum::non_interacting(3);
  PauliSum h2 = h1;
  h2.add(PauliTerm::parse("XXI"), 0.2);
  const PerturbationCheck c = gibbs_perturbation_check(h1, h2);
  EXPECT_TRUE(c.ok);
  EXPECT_NEAR(c.rhs, 2 * std::expm1(0.2), 1e-12);
  EXPECT_THROW(gibbs_perturbation_check(PauliSum::non_interacting(9), PauliSum::non_interacting(9)), ResourceError);
}

TEST(analysis, cosh_points) {
  const CoshPoint zero = cosh_bound_at(0.0);
  EXPECT_EQ(zero.stated_margin, 0.0);
  EXPECT_TRUE(zero.in_domain);
  const CoshPoint p = cosh_bound_at(2.5);
  EXPECT_NEAR(std::cosh(2.5), 6.132, 1e-3);
  EXPECT_NEAR(std::exp(6.25 / 20), 1.367, 1e-3);
  EXPECT_NEAR(p.stated_margin, std::cosh(2.5) - std::exp(0.3125), 1e-14);
  EXPECT_FALSE(cosh_bound_at(2.61).in_domain);
}

TEST(analysis, cosh_scan) {
  const CoshScan s = cosh_bound_check(1e-3);
  EXPECT_EQ(s.points, 5201u);
  EXPECT_TRUE(s.stated_holds);
  EXPECT_TRUE(s.chain_holds);
  EXPECT_NEAR(s.stated_argmin, 0.0, 1e-9);
  EXPECT_THROW(cosh_bound_check(0.0), InputError);
}

TEST(analysis, p_fail_chain_lines) {
  const PFailChain five = p_fail_chain(1.0, 5);
  const double q = std::exp(-1.0) / (1 + std::exp(-1.0));
  EXPECT_NEAR(five.exact, std::sqrt(4 * q * (1 - q)), 1e-15);
  EXPECT_NEAR(five.cosh, 1 / std::cosh(0.5), 1e-15);
  for (int bi = 1; bi <= 260; ++bi) {
    for (int delta = 5; delta <= 100; delta += 5) {
      const PFailChain c = p_fail_chain(0.01 * bi, delta);
      ASSERT_TRUE(c.ordered()) << bi << ' ' << delta;
      // 4q(1−q) = sech²(β/2): the first three lines coincide.
      ASSERT_NEAR(c.exact / c.cosh, 1.0, 1e-12);
      ASSERT_NEAR(c.fraction / c.cosh, 1.0, 1e-12);
    }
  }
  EXPECT_THROW(p_fail_chain(1.0, 4), InputError);
}

TEST(analysis, degree_frontier) {
  const Frontier f5 = degree_frontier(5);
  EXPECT_NEAR(f5.beta_exact, f5.beta_closed_form, 1e-6);
  EXPECT_NEAR(f5.beta_exact, 2 * std::acosh(1 / 0.134), 1e-6);
  EXPECT_NEAR(f5.beta_exact, 5.397, 1e-3);
  const Frontier f20 = degree_frontier(20), f80 = degree_frontier(80);
  EXPECT_NEAR(f20.beta_exact, 2.176, 1e-3);
  EXPECT_NEAR(f80.beta_exact, 1.03, 1e-2);
  EXPECT_LE(f80.beta_exact, 0.5 * f20.beta_exact * 1.1);
  EXPECT_GT(f20.beta_exact / f80.beta_exact, 1.8);
  EXPECT_NEAR(f20.beta_exp100, std::sqrt(100 * std::log(1 / 0.134) / 20), 1e-6);
  EXPECT_NEAR(f20.beta_exp40, std::sqrt(40 * std::log(1 / 0.134) / 20), 1e-6);
  EXPECT_THROW(degree_frontier(3), InputError);
}
