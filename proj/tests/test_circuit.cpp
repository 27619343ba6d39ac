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

#include "gibbsforge/circuit.hpp"

#include <random>
#include <set>

#include "gibbsforge/encoding.hpp"
#include "gtest/gtest.h"
#include "oracle.hpp"

using namespace gibbsforge;

namespace {

double max_diff(const oracle::Mat& a, const oracle::Mat& b) { return (a - b).cwiseAbs().maxCoeff(); }

std::vector<int> edge_degrees(const XProgram& p) {
  std::vector<int> deg(static_cast<std::size_t>(p.n), 0);
  for (const auto& m : p.monomials) {
    if (m.qubits.size() == 2) {
      for (int q : m.qubits) ++deg[static_cast<std::size_t>(q)];
    }
  }
  return deg;
}

XProgram with_random_prefix(XProgram p, std::mt19937_64& rng, int count) {
  for (int i = 0; i < count && p.n > 1; ++i) {
    const int c = static_cast<int>(rng() % p.n);
    p.cnot_prefix.emplace_back(c, (c + 1 + static_cast<int>(rng() % (p.n - 1))) % p.n);
  }
  return p;
}

}  // namespace

TEST(circuit, empty_program_is_identity) {
  XProgram p;
  p.n = 1;
  EXPECT_LT(max_diff(unitary_of(p), oracle::Mat::Identity(2, 2)), 1e-15);
}

TEST(circuit, half_turn_phase_flips_the_bit) {
  XProgram p;
  p.n = 1;
  p.monomials = {{{0}, 4}};
  const oracle::Mat u = unitary_of(p);
  EXPECT_NEAR(std::norm(u(1, 0)), 1.0, 1e-15);
  // H e^{iπ/2 Z} H = iX.
  EXPECT_LT(max_diff(u, std::complex<double>(0, 1) * oracle::pauli_label("X")), 1e-15);
}

TEST(circuit, unitary_matches_gate_product_oracle) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    const int n = 1 + static_cast<int>(rng() % 6);
    XProgram p = random_program(n, 1 + static_cast<int>(rng() % 3), rng());
    p.monomials.push_back({{0}, static_cast<int>(rng() % 16)});
    if (n >= 3) p.monomials.push_back({{0, 1, 2}, 3});
    p = with_random_prefix(std::move(p), rng, static_cast<int>(rng() % 4));
    ASSERT_LT(max_diff(unitary_of(p), oracle::unitary(p)), 1e-12) << "trial " << t;
  }
}

TEST(circuit, unitary_is_unitary) {
  std::mt19937_64 rng(9);
  for (int n : {2, 5, 8, 10}) {
    const XProgram p = with_random_prefix(random_program(n, 3, 100 + n), rng, 3);
    const oracle::Mat u = unitary_of(p);
    EXPECT_LT(max_diff(u * u.adjoint(), oracle::Mat::Identity(u.rows(), u.cols())), 1e-10) << n;
  }
}

TEST(circuit, unitary_cap) {
  XProgram p;
  p.n = 6;
  EXPECT_THROW(unitary_of(p, 5), ResourceError);
}

TEST(circuit, long_precision_matches_double) {
  const XProgram p = random_program(4, 2, 17);
  const auto ul = unitary_of<long double>(p);
  EXPECT_LT(max_diff(ul.cast<std::complex<double>>(), unitary_of(p)), 1e-14);
}

TEST(circuit, walsh_hadamard_matches_matrix) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Random(16);
  const Eigen::VectorXcd expected = oracle::hadamard_all(4) * v;
  walsh_hadamard(v);
  EXPECT_LT((v - expected).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(circuit, validate_rejects_malformed) {
  XProgram p;
  p.n = 2;
  p.monomials = {{{}, 1}};
  EXPECT_THROW(validate(p), InputError);
  p.monomials = {{{0, 2}, 1}};
  EXPECT_THROW(validate(p), InputError);
  p.monomials = {{{1, 1}, 1}};
  EXPECT_THROW(validate(p), InputError);
  p.monomials = {{{0, 1}, 1}};
  p.cnot_prefix = {{1, 1}};
  EXPECT_THROW(validate(p), InputError);
  p.cnot_prefix.clear();
  p.meta.layers = {{0, 0}};
  EXPECT_THROW(validate(p), InputError);
  p.meta.layers = {{0}};
  EXPECT_NO_THROW(validate(p));
}

TEST(circuit, canonicalize_sorts_and_remaps_layers) {
  XProgram p;
  p.n = 3;
  p.monomials = {{{2, 1}, 2}, {{0}, 1}, {{1, 0}, 2}};
  p.meta.layers = {{0}, {2}};
  const XProgram c = canonicalize(p);
  EXPECT_EQ(c.monomials[0].qubits, std::vector<int>({0}));
  EXPECT_EQ(c.monomials[1].qubits, std::vector<int>({0, 1}));
  EXPECT_EQ(c.monomials[2].qubits, std::vector<int>({1, 2}));
  EXPECT_TRUE(layers_are_matchings(c));
  EXPECT_EQ(c.meta.layers, (std::vector<std::vector<int>>{{2}, {1}}));
  EXPECT_LT(max_diff(unitary_of(c), unitary_of(p)), 1e-15);
}

TEST(circuit, restrict_to_keeps_internal_monomials) {
  XProgram p;
  p.n = 4;
  p.monomials = {{{0, 1}, 2}, {{1, 2}, 2}, {{3}, 1}, {{2}, 1}};
  p.cnot_prefix = {{2, 1}, {0, 3}};
  const XProgram r = restrict_to(p, {2, 1});
  EXPECT_EQ(r.n, 2);
  EXPECT_EQ(r.monomials.size(), 2u);
  EXPECT_EQ(r.cnot_prefix, (std::vector<std::pair<int, int>>{{0, 1}}));
  EXPECT_THROW(restrict_to(p, {0, 0}), InputError);
}

TEST(circuit, random_program_deterministic) {
  EXPECT_EQ(random_program(6, 3, 42), random_program(6, 3, 42));
  EXPECT_NE(random_program(6, 3, 42), random_program(6, 3, 43));
  EXPECT_LE(two_qubit_depth(random_program(6, 3, 42)), 3);
}

TEST(circuit, raussendorf_cell_degree_and_layers) {
  for (int L : {1, 2}) {
    const XProgram p = generate_family({LatticeFamily::raussendorf3d, L, {}});
    EXPECT_EQ(p.meta.family, "raussendorf3d");
    for (int d : edge_degrees(p)) EXPECT_LE(d, 4);
    EXPECT_TRUE(layers_are_matchings(p));
    EXPECT_LE(p.meta.layers.size(), 4u);
    EXPECT_EQ(two_qubit_depth(p), static_cast<int>(p.meta.layers.size()));
  }
  // One cube: 12 edges and 6 faces, each face bordered by 4 edges.
  const LatticeGraph g = raussendorf_graph(1);
  EXPECT_EQ(g.n, 18);
  EXPECT_EQ(g.edges.size(), 24u);
  EXPECT_EQ(raussendorf_graph(2).n, 90);
}

TEST(circuit, raussendorf_bulk_degree_is_four) {
  const XProgram p = generate_family({LatticeFamily::raussendorf3d, 3, {}});
  const auto deg = edge_degrees(p);
  EXPECT_EQ(*std::max_element(deg.begin(), deg.end()), 4);
  EXPECT_TRUE(layers_are_matchings(p));
  EXPECT_LE(p.meta.layers.size(), 4u);
}

TEST(circuit, brickwork_two_by_two) {
  const XProgram p = generate_family({LatticeFamily::brickwork2d, 2, {}});
  EXPECT_EQ(p.n, 4);
  std::set<std::vector<int>> edges;
  int singles = 0;
  for (const auto& m : p.monomials) {
    if (m.qubits.size() == 2) {
      edges.insert(m.qubits);
      EXPECT_EQ(m.k, 2);
    } else {
      ++singles;
      EXPECT_EQ(m.k, 1);
    }
  }
  EXPECT_EQ(edges, (std::set<std::vector<int>>{{0, 1}, {2, 3}, {0, 2}, {1, 3}}));
  EXPECT_EQ(singles, 4);
  EXPECT_TRUE(layers_are_matchings(p));
  EXPECT_LE(p.meta.layers.size(), 4u);
}

TEST(circuit, designated_phase_pattern) {
  LatticeSpec spec{LatticeFamily::brickwork2d, 3, {2, 1, std::vector<int>{0, 4, 8}}};
  const XProgram p = generate_family(spec);
  int singles = 0;
  for (const auto& m : p.monomials) singles += m.qubits.size() == 1;
  EXPECT_EQ(singles, 3);
  EXPECT_EQ(generate_family(spec), p);
  EXPECT_THROW(parse_family("hexagonal"), InputError);
  EXPECT_THROW(generate_family({LatticeFamily::brickwork2d, 0, {}}), InputError);
}

TEST(circuit, encode_bms_structure) {
  XProgram c;
  c.n = 2;
  c.monomials = {{{0, 1}, 3}};
  const XProgram e = encode_bms(c, 2);
  EXPECT_EQ(e.n, 4);
  ASSERT_EQ(e.monomials.size(), 1u);
  EXPECT_EQ(e.monomials[0].qubits, std::vector<int>({0, 1, 2, 3}));
  EXPECT_EQ(e.monomials[0].k, 3);
  EXPECT_TRUE(e.cnot_prefix.empty());
  const XProgram r = random_program(5, 3, 8);
  EXPECT_EQ(encode_bms(r, 3).monomials.size(), r.monomials.size());
  EXPECT_EQ(encode_bms(r, 1).monomials, r.monomials);
  EXPECT_THROW(encode_bms(r, 0), InputError);
}

TEST(circuit, encode_cnot_structure) {
  XProgram one;
  one.n = 1;
  one.monomials = {{{0}, 1}};
  EXPECT_EQ(encode_cnot(one, 3).cnot_prefix, (std::vector<std::pair<int, int>>{{0, 1}, {0, 2}}));
  EXPECT_TRUE(encode_cnot(one, 1).cnot_prefix.empty());

  XProgram two;
  two.n = 2;
  two.monomials = {{{0}, 1}, {{0, 1}, 2}};
  const XProgram e = encode_cnot(two, 2);
  EXPECT_EQ(e.cnot_prefix.size(), 2u);
  std::set<int> touched;
  for (const auto& m : e.monomials) touched.insert(m.qubits.begin(), m.qubits.end());
  EXPECT_EQ(touched, (std::set<int>{0, 2}));
  EXPECT_THROW(encode_cnot(e, 2), InputError);
}

// B†·C₁·B = C_enc with every matrix built by the gate-product oracle.
TEST(circuit, encoded_unitary_identity_oracle) {
  for (int r = 1; r <= 3; ++r) {
    for (int k : {1, 2, 5}) {
      XProgram c;
      c.n = 2;
      c.monomials = {{{0}, k}, {{1}, 2}, {{0, 1}, k + 1}};
      XProgram star = encode_cnot(c, r);
      XProgram b;
      b.n = star.n;
      b.cnot_prefix = star.cnot_prefix;
      star.cnot_prefix.clear();
      const oracle::Mat bm = oracle::unitary(b), c1 = oracle::unitary(star);
      EXPECT_LT(max_diff(bm.adjoint() * c1 * bm, oracle::unitary(encode_bms(c, r))), 1e-12) << r << ' ' << k;
    }
  }
}

// Classical XOR unfold of C* outcomes reproduces the C_enc distribution.
TEST(circuit, cnot_form_samples_unfold_to_bms_form) {
  const XProgram c = random_program(2, 1, 77);
  for (int r = 2; r <= 4; ++r) {
    const oracle::Mat star = oracle::unitary(encode_cnot(c, r)), enc = oracle::unitary(encode_bms(c, r));
    const BlockLayout layout(2, r);
    for (double q : {0.0, 0.2}) {
      const Eigen::VectorXd ps = oracle::noisy_output(star, 2 * r, q), pe = oracle::noisy_output(enc, 2 * r, q);
      Eigen::VectorXd unfolded = Eigen::VectorXd::Zero(ps.size());
      for (Eigen::Index s = 0; s < ps.size(); ++s) unfolded(xor_unfold(static_cast<std::uint64_t>(s), layout)) += ps(s);
      EXPECT_LT((unfolded - pe).lpNorm<1>(), 1e-12) << r << ' ' << q;
    }
  }
}

TEST(circuit, diagonal_phase_units) {
  XProgram p;
  p.n = 2;
  p.monomials = {{{0}, 1}, {{0, 1}, 2}};
  // y=0: +1+2; y=1 (qubit 0 set): −1−2; y=2: +1−2; y=3: −1+2.
  EXPECT_EQ(diagonal_phase_units(p), (std::vector<int>{3, -3, -1, 1}));
}
