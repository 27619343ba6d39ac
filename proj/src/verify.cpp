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

#include "gibbsforge/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <queue>
#include <random>

#include "gibbsforge/analysis.hpp"
#include "gibbsforge/encoding.hpp"
#include "gibbsforge/hamiltonian.hpp"
#include "gibbsforge/simulate.hpp"

namespace gibbsforge {

namespace {

using ojson = nlohmann::ordered_json;

constexpr double kBetas[] = {0.5, 1.0, 1.87, 3.0};
constexpr double kEquivTol = 1e-9;
constexpr double kExactTol = 1e-10;

Verdict make(std::string check, ojson inputs) {
  Verdict v;
  v.check = std::move(check);
  v.inputs = std::move(inputs);
  return v;
}

XProgram two_qubit_gate(int k0, int k1, int k01) {
  XProgram p;
  p.n = 2;
  p.monomials = {{{0}, k0}, {{1}, k1}, {{0, 1}, k01}};
  return p;
}

XProgram prefix_only(const XProgram& program) {
  XProgram b;
  b.n = program.n;
  b.cnot_prefix = program.cnot_prefix;
  return b;
}

// Push-forward of an exact distribution through the CNOT network's XOR map.
Distribution unfold_distribution(const Distribution& dist, const BlockLayout& layout) {
  const Eigen::VectorXd& p = dist.probabilities();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(p.size());
  for (Eigen::Index s = 0; s < p.size(); ++s) {
    out(static_cast<Eigen::Index>(xor_unfold(static_cast<std::uint64_t>(s), layout))) += p(s);
  }
  return Distribution::exact(dist.num_bits(), std::move(out));
}

double product_defect(const Distribution& dist) {
  const Eigen::VectorXd& p = dist.probabilities();
  const int n = dist.num_bits();
  std::vector<double> one(static_cast<std::size_t>(n), 0.0);
  for (Eigen::Index s = 0; s < p.size(); ++s) {
    for (int i = 0; i < n; ++i) {
      if ((s >> i) & 1) one[static_cast<std::size_t>(i)] += p(s);
    }
  }
  double worst = 0.0;
  for (Eigen::Index s = 0; s < p.size(); ++s) {
    double prod = 1.0;
    for (int i = 0; i < n; ++i) prod *= (s >> i) & 1 ? one[static_cast<std::size_t>(i)] : 1.0 - one[static_cast<std::size_t>(i)];
    worst = std::max(worst, std::abs(prod - p(s)));
  }
  return worst;
}

DenseMatrix<> random_hermitian(int dim, double scale, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  DenseMatrix<> a(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) a(i, j) = {g(rng), g(rng)};
  }
  DenseMatrix<> h = (a + a.adjoint()) * (0.5 * scale);
  return h;
}

Eigen::VectorXd random_simplex(Eigen::Index size, std::mt19937_64& rng, double floor) {
  std::uniform_real_distribution<double> u(floor, 1.0);
  Eigen::VectorXd v(size);
  for (Eigen::Index i = 0; i < size; ++i) v(i) = u(rng);
  return v / v.sum();
}

}  // namespace

ojson Verdict::to_json() const {
  ojson j;
  j["check"] = check;
  j["inputs"] = inputs;
  j["values"] = values;
  j["ok"] = ok;
  return j;
}

std::vector<int> connected_patch(const LatticeGraph& graph, int count) {
  if (count < 1 || count > graph.n) throw InputError("connected_patch: size out of range");
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(graph.n));
  for (const auto& [a, b] : graph.edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
  std::vector<int> order;
  std::vector<bool> seen(static_cast<std::size_t>(graph.n), false);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = true;
  while (!frontier.empty() && static_cast<int>(order.size()) < count) {
    const int v = frontier.front();
    frontier.pop();
    order.push_back(v);
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        frontier.push(w);
      }
    }
  }
  if (static_cast<int>(order.size()) < count) throw InputError("connected_patch: component too small");
  return order;
}

std::vector<NamedProgram> benchmark_programs(int max_n, std::uint64_t seed) {
  std::vector<NamedProgram> all;
  const std::pair<int, int> random_shapes[] = {{2, 1}, {3, 0}, {3, 2}, {4, 2}, {5, 3},
                                               {6, 2}, {6, 4}, {7, 3}, {8, 2}, {8, 4}};
  std::uint64_t s = seed;
  for (const auto& [n, d] : random_shapes) {
    all.push_back({"random_n" + std::to_string(n) + "_d" + std::to_string(d), random_program(n, d, s++)});
  }
  LatticeSpec brick{LatticeFamily::brickwork2d, 2, {}};
  const XProgram brickwork = generate_family(brick);
  all.push_back({"brickwork2d_L2", brickwork});
  brick.phase_pattern.designated = std::vector<int>{0, 3};
  all.push_back({"brickwork2d_L2_designated", generate_family(brick)});

  const XProgram cell = generate_family({LatticeFamily::raussendorf3d, 1, {}});
  const LatticeGraph graph = raussendorf_graph(1);
  const XProgram patch8 = restrict_to(cell, connected_patch(graph, 8));
  const XProgram patch4 = restrict_to(cell, connected_patch(graph, 4));
  all.push_back({"raussendorf3d_L1_patch8", patch8});
  all.push_back({"raussendorf3d_L1_patch5", restrict_to(cell, connected_patch(graph, 5))});

  const XProgram r2 = random_program(2, 1, seed + 100);
  const XProgram r4 = random_program(4, 2, seed + 101);
  all.push_back({"cnot_random_n2_r3", encode_cnot(r2, 3)});
  all.push_back({"cnot_random_n2_r4", encode_cnot(r2, 4)});
  all.push_back({"cnot_random_n4_r2", encode_cnot(r4, 2)});
  all.push_back({"cnot_brickwork2d_L2_r2", encode_cnot(brickwork, 2)});
  all.push_back({"cnot_raussendorf3d_patch4_r2", encode_cnot(patch4, 2)});
  all.push_back({"bms_random_n2_r3", encode_bms(r2, 3)});
  all.push_back({"bms_random_n4_r2", encode_bms(r4, 2)});
  all.push_back({"bms_brickwork2d_L2_r2", encode_bms(brickwork, 2)});

  std::vector<NamedProgram> kept;
  for (auto& p : all) {
    if (p.program.n <= max_n) kept.push_back(std::move(p));
  }
  return kept;
}

std::vector<Verdict> verify_equivalence(const SuiteOptions& opts) {
  std::vector<Verdict> out;
  const auto programs = benchmark_programs(opts.max_n, opts.seed);
  for (const auto& [name, program] : programs) {
    const ParentHamiltonian h = build_parent(program);
    Verdict eq = make("gibbs_noisy_equivalence", {{"program", name}, {"n", program.n}, {"betas", kBetas}});
    Verdict pf = make("partition_function", {{"program", name}, {"n", program.n}, {"betas", kBetas}});
    double worst_sn = 0, worst_sd = 0, worst_nd = 0, worst_rel = 0;
    for (double beta : kBetas) {
      const Distribution spectral = gibbs_diagonal_spectral(program, beta);
      const Distribution noisy = noisy_circuit_exact(program, NoiseSpec(q_of_beta(beta)));
      const Distribution dense = gibbs_diagonal_dense(h, beta);
      worst_sn = std::max(worst_sn, l1_distance(spectral, noisy));
      worst_sd = std::max(worst_sd, l1_distance(spectral, dense));
      worst_nd = std::max(worst_nd, l1_distance(noisy, dense));
      const double z = partition_function(program.n, beta);
      worst_rel = std::max(worst_rel, std::abs(dense_partition_function(h, beta) - z) / z);
    }
    eq.values = {{"l1_spectral_noisy", worst_sn}, {"l1_spectral_dense", worst_sd}, {"l1_noisy_dense", worst_nd}};
    eq.ok = std::max({worst_sn, worst_sd, worst_nd}) <= kEquivTol;
    out.push_back(std::move(eq));

    const Eigen::VectorXd spectrum = dense_spectrum(h);
    std::vector<int> weights;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << program.n); ++x) weights.push_back(std::popcount(x));
    std::sort(weights.begin(), weights.end());
    double spec_err = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      spec_err = std::max(spec_err, std::abs(spectrum(static_cast<Eigen::Index>(i)) - weights[i]));
    }
    pf.values = {{"max_relative_error", worst_rel}, {"spectrum_max_error", spec_err}};
    pf.ok = worst_rel <= kEquivTol && spec_err <= kEquivTol;
    out.push_back(std::move(pf));
  }

  for (const auto& [name, program] : programs) {
    if (!program.cnot_prefix.empty() || program.n > std::min(6, opts.max_n)) continue;
    Verdict v = make("measured_gibbs_equivalence", {{"program", name}, {"n", program.n}, {"betas", kBetas},
                                                    {"q_meas", {0.0, 0.05, 0.1}}});
    double worst = 0;
    for (double beta : kBetas) {
      for (double qm : {0.0, 0.05, 0.1}) worst = std::max(worst, measured_gibbs_equivalence(program, beta, qm).deviation);
    }
    v.values = {{"max_l1", worst}};
    v.ok = worst <= kExactTol;
    out.push_back(std::move(v));
  }

  if (opts.shots > 0 && opts.max_n >= 4) {
    const XProgram program = random_program(4, 2, opts.seed + 7);
    const NoiseSpec noise(0.25);
    Verdict v = make("sampler_statistics", {{"n", 4}, {"q", 0.25}, {"shots", opts.shots}, {"seed", opts.seed}});
    const auto one = sample_shots(program, noise, opts.shots, opts.seed, 1);
    const auto four = sample_shots(program, noise, opts.shots, opts.seed, 4);
    std::map<std::uint64_t, std::uint64_t> counts;
    for (auto s : one) ++counts[s];
    const double l1 = l1_distance(Distribution::empirical(4, std::move(counts)), noisy_circuit_exact(program, noise));
    // 0.01 at 10^6 shots, scaled with the 1/sqrt(shots) sampling error.
    const double tol = 0.01 * std::sqrt(1e6 / static_cast<double>(opts.shots));
    v.values = {{"l1", l1}, {"tolerance", tol}, {"threads_identical", one == four}};
    v.ok = l1 <= tol && one == four;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Verdict> verify_encoding(const SuiteOptions& opts) {
  std::vector<Verdict> out;

  for (int r = 1; r <= 3; ++r) {
    Verdict v = make("encoded_unitary_identity", {{"n", 2}, {"r", r}, {"k_grid", "0..7"}});
    double worst = 0, worst_split = 0;
    for (int k0 = 0; k0 < 8; ++k0) {
      for (int k1 = 0; k1 < 8; ++k1) {
        for (int k01 = 0; k01 < 8; ++k01) {
          const XProgram c = two_qubit_gate(k0, k1, k01);
          XProgram star = encode_cnot(c, r);
          const auto b = unitary_of(prefix_only(star));
          const auto c_star = unitary_of(star);
          star.cnot_prefix.clear();
          const auto c1 = unitary_of(star);
          const auto c_enc = unitary_of(encode_bms(c, r));
          worst = std::max(worst, (b.adjoint() * c1 * b - c_enc).cwiseAbs().maxCoeff());
          worst_split = std::max(worst_split, (c_star - c1 * b).cwiseAbs().maxCoeff());
        }
      }
    }
    v.values = {{"max_abs_error", worst}, {"split_error", worst_split}};
    v.ok = worst <= kExactTol && worst_split <= kExactTol;
    out.push_back(std::move(v));
  }

  for (int n = 1; n <= 2; ++n) {
    for (int r = 1; r <= 3; ++r) {
      if (n * r > opts.max_n) continue;
      const TieRule rule = r % 2 ? TieRule::zero : TieRule::leader;
      const BlockLayout layout(n, r);
      const XProgram c = n == 2 ? two_qubit_gate(1, 3, 2) : random_program(1, 0, opts.seed, 1.0);
      const XProgram star = encode_cnot(c, r), bms = encode_bms(c, r);
      Verdict v = make("decoding_pipeline",
                       {{"n", n}, {"r", r}, {"q", {0.0, 0.1, 0.25}}, {"tie_rule", to_string(rule)}});
      double worst_cnot = 0, worst_bms = 0, worst_unfold = 0;
      for (double q : {0.0, 0.1, 0.25}) {
        const NoiseSpec noise(q);
        const Distribution p_star = noisy_circuit_exact(star, noise);
        const Distribution p_bms = noisy_circuit_exact(bms, noise);
        const Distribution ref = noisy_circuit_exact(c, NoiseSpec(failure_rate_exact(q, r, rule)));
        worst_cnot = std::max(worst_cnot, l1_distance(decode_distribution(p_star, layout, rule, EncodedForm::cnot), ref));
        worst_bms = std::max(worst_bms, l1_distance(decode_distribution(p_bms, layout, rule, EncodedForm::bms), ref));
        worst_unfold = std::max(worst_unfold, l1_distance(unfold_distribution(p_star, layout), p_bms));
      }
      v.values = {{"l1_cnot_form", worst_cnot}, {"l1_bms_form", worst_bms}, {"l1_unfold_vs_bms", worst_unfold}};
      v.ok = std::max({worst_cnot, worst_bms, worst_unfold}) <= kExactTol;
      out.push_back(std::move(v));
    }
  }

  {
    // Single-qubit phases only, so the logical output is a product distribution.
    XProgram c;
    c.n = 2;
    c.monomials = {{{0}, 1}, {{1}, 3}};
    Verdict v = make("block_independence", {{"n", 2}, {"r", 3}, {"q", 0.25}});
    const BlockLayout layout(2, 3);
    const Distribution decoded =
        decode_distribution(noisy_circuit_exact(encode_cnot(c, 3), NoiseSpec(0.25)), layout, TieRule::zero);
    const double defect = product_defect(decoded);
    v.values = {{"max_product_defect", defect}};
    v.ok = defect <= kExactTol;
    out.push_back(std::move(v));
  }

  {
    Verdict v = make("failure_rate_bound", {{"q", "0..0.5 step 0.01"}, {"r", "1..15"}, {"tie_rules", {"zero", "leader"}}});
    int violations = 0;
    double tightest = std::numeric_limits<double>::infinity();
    for (int qi = 0; qi <= 50; ++qi) {
      const double q = qi * 0.01;
      for (int r = 1; r <= 15; ++r) {
        const double bound = failure_rate_bound(q, r);
        for (TieRule rule : {TieRule::zero, TieRule::leader}) {
          const double exact = failure_rate_exact(q, r, rule);
          tightest = std::min(tightest, bound - exact);
          if (exact > bound * (1 + 1e-12)) ++violations;
        }
      }
    }
    v.values = {{"violations", violations}, {"min_margin", tightest}, {"r3_q025", failure_rate_exact(0.25, 3)}};
    v.ok = violations == 0;
    out.push_back(std::move(v));
  }

  {
    Verdict v = make("encoded_locality", {{"n", {3, 4, 6}}, {"depth", "1..4"}, {"r", "1..4"}});
    int violations = 0, cases = 0;
    ojson worst = ojson::array();
    for (int n : {3, 4, 6}) {
      for (int d = 1; d <= 4; ++d) {
        const XProgram c = random_program(n, d, opts.seed + static_cast<std::uint64_t>(10 * n + d));
        const int depth = two_qubit_depth(c);
        for (int r = 1; r <= 4; ++r) {
          const InteractionProfile prof = analyze(build_parent(encode_cnot(c, r)));
          ++cases;
          const bool ok = prof.locality_k <= depth + 2 && prof.degree <= r * (depth + 1);
          if (!ok) {
            ++violations;
            worst.push_back({{"n", n}, {"d", depth}, {"r", r}, {"k", prof.locality_k}, {"delta", prof.degree}});
          }
        }
      }
    }
    v.values = {{"cases", cases}, {"violations", violations}, {"failing", worst}};
    v.ok = violations == 0;
    out.push_back(std::move(v));
  }

  for (int L : {1, 2}) {
    const XProgram family = generate_family({LatticeFamily::raussendorf3d, L, {}});
    const InteractionProfile prof = analyze(build_parent(family));
    Verdict v = make("family_locality", {{"family", "raussendorf3d"}, {"L", L}, {"n", family.n}});
    v.values = {{"k", prof.locality_k},
                {"delta", prof.degree},
                {"delta_excluding_own", prof.degree_excluding_own},
                {"layers", family.meta.layers.size()},
                {"layers_valid", layers_are_matchings(family)}};
    v.ok = prof.locality_k <= 5 && prof.degree <= 5 && family.meta.layers.size() <= 4 && layers_are_matchings(family);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Verdict> verify_lemmas(const SuiteOptions& opts) {
  std::vector<Verdict> out;
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);

  {
    Verdict v = make("postselection_gap", {{"trials", opts.trials}, {"max_n", std::min(8, opts.max_n)}});
    int premise_held = 0, violations = 0;
    double max_gap_ratio = 0;
    const int top = std::max(2, std::min(8, opts.max_n));
    for (int t = 0; t < opts.trials; ++t) {
      const int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(top - 1));
      const auto dim = Eigen::Index{1} << n;
      std::uint64_t mask = 0;
      while (mask == 0) mask = (rng() & ((std::uint64_t{1} << n) - 1)) & ~std::uint64_t{1};
      const double delta = t % 2 ? 0.3 : 0.01 + 0.48 * u01(rng);
      const Eigen::VectorXd p = random_simplex(dim, rng, 0.05);
      const Eigen::VectorXd noise = random_simplex(dim, rng, 0.0);
      double p_post = 0;
      for (Eigen::Index s = 0; s < dim; ++s) {
        if (!(static_cast<std::uint64_t>(s) & mask)) p_post += p(s);
      }
      const double spread = (noise - p).lpNorm<1>();
      const double mix = std::min(1.0, 0.999 * u01(rng) * delta / (2 + delta) * p_post / spread);
      const Distribution a = Distribution::exact(n, p);
      const Distribution b = Distribution::exact(n, (1 - mix) * p + mix * noise);
      const PostselectResult res = postselect_gap(a, b, 0, mask, delta);
      if (res.premise_ok) {
        ++premise_held;
        if (!res.conclusion_ok) ++violations;
        max_gap_ratio = std::max(max_gap_ratio, res.gap / delta);
      }
    }
    v.values = {{"premise_held", premise_held}, {"violations", violations}, {"max_gap_over_delta", max_gap_ratio}};
    v.ok = violations == 0 && premise_held == opts.trials;
    out.push_back(std::move(v));
  }

  {
    Verdict v = make("gibbs_perturbation", {{"trials", opts.trials}, {"max_dim", 16}});
    int violations = 0;
    double worst_ratio = 0;
    for (int t = 0; t < opts.trials; ++t) {
      const int dim = 2 + static_cast<int>(rng() % 15);
      const DenseMatrix<> h1 = random_hermitian(dim, 3.0 * u01(rng), rng);
      const DenseMatrix<> h2 = t % 2 ? random_hermitian(dim, 3.0 * u01(rng), rng)
                                     : DenseMatrix<>(h1 + random_hermitian(dim, std::pow(10.0, -3.0 * u01(rng)), rng));
      const PerturbationCheck c = gibbs_perturbation_check(h1, h2);
      if (!c.ok) ++violations;
      if (c.rhs > 0) worst_ratio = std::max(worst_ratio, c.lhs / c.rhs);
    }
    v.values = {{"violations", violations}, {"max_lhs_over_rhs", worst_ratio}};
    v.ok = violations == 0;
    out.push_back(std::move(v));
  }

  {
    const CoshScan scan = cosh_bound_check(1e-3);
    Verdict v = make("cosh_bound", {{"domain", kCoshDomain}, {"step", 1e-3}});
    v.values = {{"points", scan.points},
                {"stated_min_margin", scan.stated_min_margin},
                {"stated_argmin", scan.stated_argmin},
                {"chain_min_margin", scan.chain_min_margin},
                {"chain_argmin", scan.chain_argmin},
                {"stated_holds", scan.stated_holds},
                {"chain_holds", scan.chain_holds}};
    v.ok = scan.stated_holds && scan.chain_holds;
    out.push_back(std::move(v));
  }

  {
    Verdict v = make("p_fail_chain", {{"beta", "0.01..2.6 step 0.01"}, {"delta", "5..100 step 5"}});
    int violations = 0, points = 0;
    double max_exp40_over_exp100 = 0;
    for (int bi = 1; bi <= 260; ++bi) {
      for (int delta = 5; delta <= 100; delta += 5) {
        const PFailChain c = p_fail_chain(bi * 0.01, delta);
        ++points;
        if (!c.ordered()) ++violations;
        max_exp40_over_exp100 = std::max(max_exp40_over_exp100, c.exp40 / c.exp100);
      }
    }
    v.values = {{"points", points}, {"violations", violations}, {"max_exp40_over_exp100", max_exp40_over_exp100}};
    v.ok = violations == 0;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Verdict> verify_thresholds(const SuiteOptions&) {
  std::vector<Verdict> out;
  {
    const ThresholdReport r = hardness_threshold();
    Verdict v = make("hardness_threshold", {{"q_star", r.q_star}});
    v.values = {{"beta_star", r.beta_star}, {"round_trip_error", r.round_trip_error}, {"in_range", r.beta_star_in_range}};
    v.ok = r.beta_star_in_range && std::abs(r.round_trip_error) <= 1e-12;
    out.push_back(std::move(v));
  }
  {
    const double beta = 3.0, q_meas = 0.05;
    const MeasurementThreshold m = measurement_threshold(beta, q_meas);
    const double qg = std::exp(-beta) / (1 + std::exp(-beta));
    const double qp = qg * (1 - q_meas) + q_meas * (1 - qg);
    const double bp = std::log((1 - qp) / qp);
    Verdict v = make("measurement_threshold", {{"beta", beta}, {"q_meas", q_meas}});
    v.values = {{"q_gibbs", m.q_gibbs}, {"q_prime", m.q_prime}, {"beta_prime", m.beta_prime}, {"hard", m.hard}};
    v.ok = std::abs(m.beta_prime - bp) <= 1e-12 && m.hard == (qp <= kHardnessQ);
    out.push_back(std::move(v));
  }
  {
    Verdict v = make("degree_frontier", {{"delta", {5, 20, 80}}, {"tolerance", 1e-6}});
    ojson rows = ojson::array();
    bool ok = true;
    double b20 = 0, b80 = 0;
    for (int delta : {5, 20, 80}) {
      const Frontier f = degree_frontier(delta);
      rows.push_back({{"delta", delta},
                      {"beta_exact", f.beta_exact},
                      {"beta_closed_form", f.beta_closed_form},
                      {"beta_exp100", f.beta_exp100},
                      {"beta_exp40", f.beta_exp40}});
      ok = ok && std::abs(f.beta_exact - f.beta_closed_form) <= 1e-6;
      if (delta == 20) b20 = f.beta_exact;
      if (delta == 80) b80 = f.beta_exact;
    }
    // Quadrupling Δ should roughly halve the frontier.
    const double ratio = b20 / b80;
    v.values = {{"frontier", rows}, {"ratio_20_over_80", ratio}};
    v.ok = ok && ratio > 1.8 && ratio < 2.3;
    out.push_back(std::move(v));
  }
  {
    Verdict v = make("formula_calculators", {{"tvd_budget", {2, 0.25}}, {"prep_epsilon", {1, 0.0}}});
    const double tvd = tvd_budget(2, 0.25);
    const double eps = prep_epsilon(1, 0.0);
    const double growth = prep_runtime(8, 4, 3, 1.0, 1e-3).exponential_factor /
                          prep_runtime(8, 4, 2, 1.0, 1e-3).exponential_factor;
    v.values = {{"tvd_budget", tvd}, {"prep_epsilon", eps}, {"runtime_locality_growth", growth}};
    v.ok = std::abs(tvd - 0.5625 * std::ldexp(1.0, -16) / 5) <= 1e-18 &&
           std::abs(eps - std::ldexp(1.0, -11) / 9) <= 1e-18 && growth == 16.0;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Verdict> run_suite(const std::string& name, const SuiteOptions& opts) {
  if (name == "equivalence") return verify_equivalence(opts);
  if (name == "encoding") return verify_encoding(opts);
  if (name == "lemmas") return verify_lemmas(opts);
  if (name == "thresholds") return verify_thresholds(opts);
  if (name == "all") {
    std::vector<Verdict> all;
    for (const char* part : {"equivalence", "encoding", "lemmas", "thresholds"}) {
      auto v = run_suite(part, opts);
      all.insert(all.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
    }
    return all;
  }
  throw InputError("unknown suite \"" + name + "\" (expected equivalence, encoding, lemmas, thresholds or all)");
}

}  // namespace gibbsforge
