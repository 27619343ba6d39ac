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

#include "gibbsforge/pauli.hpp"

#include <random>

#include "gtest/gtest.h"
#include "oracle.hpp"

using namespace gibbsforge;

namespace {

PauliTerm random_term(int n, std::mt19937_64& rng) {
  return PauliTerm(BitMask::from_u64(n, rng() & ((1u << n) - 1)), BitMask::from_u64(n, rng() & ((1u << n) - 1)),
                   static_cast<int>(rng() % 4));
}

PauliSum random_sum(int n, int terms, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  PauliSum s(n);
  for (int i = 0; i < terms; ++i) {
    s.add(PauliKey{BitMask::from_u64(n, rng() % (1u << n)), BitMask::from_u64(n, rng() % (1u << n))}, u(rng));
  }
  return s;
}

double max_diff(const oracle::Mat& a, const oracle::Mat& b) { return (a - b).cwiseAbs().maxCoeff(); }

oracle::Mat dense(const PauliTerm& t) { return to_dense(t); }
oracle::Mat dense(const PauliSum& s) { return to_dense(s); }

}  // namespace

TEST(pauli, parse_and_str) {
  EXPECT_EQ(PauliTerm::parse("+X_Z").str(), "+XIZ");
  EXPECT_EQ(PauliTerm::parse("-iY_Z").str(), "-iYIZ");
  EXPECT_EQ(PauliTerm::parse(PauliTerm::parse("iXYZ").str()), PauliTerm::parse("iXYZ"));
  EXPECT_EQ(PauliTerm::parse("Y").pauli_at(0), 'Y');
  EXPECT_THROW(PauliTerm::parse("+XQ"), InputError);
}

TEST(pauli, dense_matches_label_oracle) {
  for (const char* label : {"+X", "-Y", "iZ", "+XY", "-iYZX", "+_Y_Z"}) {
    EXPECT_LT(max_diff(dense(PauliTerm::parse(label)), oracle::pauli_label(label)), 1e-15) << label;
  }
}

TEST(pauli, multiply_single_qubit_relations) {
  EXPECT_EQ(multiply(PauliTerm::parse("X"), PauliTerm::parse("Z")), PauliTerm::parse("-iY"));
  EXPECT_EQ(multiply(PauliTerm::parse("Z"), PauliTerm::parse("X")), PauliTerm::parse("iY"));
  EXPECT_EQ(multiply(PauliTerm::parse("Y"), PauliTerm::parse("Y")), PauliTerm::identity(1));
  const PauliTerm p = PauliTerm::parse("-iXYZ");
  EXPECT_EQ(multiply(PauliTerm::identity(3), p), p);
}

TEST(pauli, multiply_two_qubit_against_dense) {
  // Z·X = +iY on qubit 0.
  const PauliTerm prod = multiply(PauliTerm::parse("ZZ"), PauliTerm::parse("XI"));
  EXPECT_EQ(prod.str(), "+iYZ");
  EXPECT_LT(max_diff(dense(prod), oracle::pauli_label("ZZ") * oracle::pauli_label("XI")), 1e-15);
}

TEST(pauli, multiply_size_mismatch) {
  EXPECT_THROW(multiply(PauliTerm::identity(2), PauliTerm::identity(3)), InputError);
}

TEST(pauli, multiply_associative_and_phase_exact) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 10000; ++t) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const PauliTerm a = random_term(n, rng), b = random_term(n, rng), c = random_term(n, rng);
    ASSERT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
    if (t % 10 == 0) {
      ASSERT_LT(max_diff(dense(multiply(a, b)), dense(a) * dense(b)), 1e-14);
    }
  }
}

TEST(pauli, commutation_matches_dense) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const PauliTerm a = random_term(3, rng), b = random_term(3, rng);
    const oracle::Mat da = dense(a), db = dense(b);
    EXPECT_EQ(a.commutes_with(b), max_diff(da * db, db * da) < 1e-12);
  }
}

TEST(pauli, phase_gate_two_qubit_quarter_turn) {
  // e^{i(π/4)Z0Z1} X0 e^{-i(π/4)Z0Z1} = −Y0Z1.
  const PauliSum x0 = PauliSum::from_term(PauliTerm::parse("XI"));
  const PauliSum out = conjugate_by_phase_gate(x0, {0, 1}, 2);
  EXPECT_EQ(out.size(), 1u);
  EXPECT_DOUBLE_EQ(out.coefficient("YZ"), -1.0);
  const oracle::Mat g = oracle::phase_gate(2, {0, 1}, 2);
  EXPECT_LT(max_diff(dense(out), g * oracle::pauli_label("XI") * g.adjoint()), 1e-14);
}

TEST(pauli, phase_gate_commuting_term_passes) {
  const PauliSum z0 = PauliSum::from_term(PauliTerm::parse("ZI"));
  for (int k = 0; k < 16; ++k) EXPECT_EQ(conjugate_by_phase_gate(z0, {0, 1}, k).max_abs_diff(z0), 0.0);
}

TEST(pauli, phase_gate_eighth_turn_single_qubit) {
  // The Y coefficient is −sin(π/4) in the dense oracle.
  const PauliSum out = conjugate_by_phase_gate(PauliSum::from_term(PauliTerm::parse("X")), {0}, 1);
  const oracle::Mat g = oracle::phase_gate(1, {0}, 1);
  const oracle::Mat expected = g * oracle::pauli_label("X") * g.adjoint();
  EXPECT_LT(max_diff(dense(out), expected), 1e-15);
  EXPECT_NEAR(out.coefficient("X"), std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(out.coefficient("Y"), -std::sqrt(0.5), 1e-15);
}

TEST(pauli, phase_gate_rejects_empty_support) {
  EXPECT_THROW(conjugate_by_phase_gate(PauliSum::non_interacting(2), {}, 1), InputError);
  EXPECT_THROW(conjugate_by_phase_gate(PauliSum::non_interacting(2), {2}, 1), InputError);
}

TEST(pauli, hadamard_layer) {
  EXPECT_DOUBLE_EQ(conjugate_by_hadamard_layer(PauliSum::from_term(PauliTerm::parse("X")), {0}).coefficient("Z"), 1);
  EXPECT_DOUBLE_EQ(conjugate_by_hadamard_layer(PauliSum::from_term(PauliTerm::parse("Y")), {0}).coefficient("Y"), -1);
  const PauliSum in = PauliSum::from_term(PauliTerm::parse("XZ"), 0.5);
  const PauliSum out = conjugate_by_hadamard_layer(in, {0, 1});
  EXPECT_DOUBLE_EQ(out.coefficient("ZX"), 0.5);
  const oracle::Mat h = oracle::hadamard_all(2);
  EXPECT_LT(max_diff(dense(out), h * dense(in) * h), 1e-15);
}

TEST(pauli, cnot_updates) {
  auto conj = [](const char* label) { return conjugate_by_cnot(PauliSum::from_term(PauliTerm::parse(label)), 0, 1); };
  EXPECT_DOUBLE_EQ(conj("IZ").coefficient("ZZ"), 1.0);
  EXPECT_DOUBLE_EQ(conj("ZI").coefficient("ZI"), 1.0);
  EXPECT_DOUBLE_EQ(conj("XI").coefficient("XX"), 1.0);
  EXPECT_DOUBLE_EQ(conj("IX").coefficient("IX"), 1.0);
  const PauliSum yy = conj("YY");
  const oracle::Mat c = oracle::cnot(2, 0, 1);
  EXPECT_LT(max_diff(dense(yy), c * oracle::pauli_label("YY") * c), 1e-15);
  EXPECT_DOUBLE_EQ(yy.coefficient("XZ"), -1.0);
  EXPECT_THROW(conjugate_by_cnot(PauliSum::non_interacting(2), 1, 1), InputError);
}

TEST(pauli, to_dense_non_interacting) {
  EXPECT_LT(max_diff(dense(PauliSum::non_interacting(1)), Eigen::Vector2cd(0, 1).asDiagonal().toDenseMatrix()), 1e-15);
  EXPECT_EQ(dense(PauliSum(2)).cwiseAbs().maxCoeff(), 0.0);
  const oracle::Mat h2 = dense(PauliSum::non_interacting(2));
  EXPECT_LT(max_diff(h2, Eigen::Vector4cd(0, 1, 1, 2).asDiagonal().toDenseMatrix()), 1e-15);
}

TEST(pauli, to_dense_cap) {
  EXPECT_THROW(to_dense(PauliSum::non_interacting(5), 4), ResourceError);
}

TEST(pauli, sum_arithmetic_prunes) {
  PauliSum a = PauliSum::from_term(PauliTerm::parse("XY"), 0.5);
  a -= PauliSum::from_term(PauliTerm::parse("XY"), 0.5);
  EXPECT_TRUE(a.empty());
  a.add(PauliTerm::parse("ZZ"), 1e-13);
  EXPECT_TRUE(a.empty());
}

TEST(pauli, projector_squares_to_itself) {
  const PauliSum p = PauliSum::excited_projector(3, 1);
  EXPECT_LT(product(p, p).max_abs_diff(p), 1e-15);
}

// Random gate sequences against U·ρ·U† with explicit gate matrices.
TEST(pauli, random_conjugation_matches_dense) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const PauliSum op = random_sum(n, 6, rng);
    PauliSum cur = op;
    oracle::Mat u = oracle::Mat::Identity(Eigen::Index{1} << n, Eigen::Index{1} << n);
    for (int step = 0; step < 8; ++step) {
      const int kind = static_cast<int>(rng() % 3);
      if (kind == 0) {
        std::vector<int> support;
        for (int q = 0; q < n; ++q) {
          if (rng() % 2) support.push_back(q);
        }
        if (support.empty()) support.push_back(static_cast<int>(rng() % n));
        const int k = static_cast<int>(rng() % 8);
        cur = conjugate_by_phase_gate(cur, support, k);
        u = oracle::phase_gate(n, support, k) * u;
      } else if (kind == 1) {
        std::vector<oracle::Mat2> f(static_cast<std::size_t>(n), oracle::Mat2::Identity());
        std::vector<int> qs;
        oracle::Mat2 h;
        h << 1, 1, 1, -1;
        for (int q = 0; q < n; ++q) {
          if (rng() % 2) {
            qs.push_back(q);
            f[static_cast<std::size_t>(q)] = h / std::sqrt(2.0);
          }
        }
        cur = conjugate_by_hadamard_layer(cur, qs);
        u = oracle::tensor(f) * u;
      } else if (n >= 2) {
        const int c = static_cast<int>(rng() % n);
        const int t = (c + 1 + static_cast<int>(rng() % (n - 1))) % n;
        cur = conjugate_by_cnot(cur, c, t);
        u = oracle::cnot(n, c, t) * u;
      }
    }
    const oracle::Mat expected = u * dense(op) * u.adjoint();
    ASSERT_LT(max_diff(dense(cur), expected), 1e-10) << "trial " << trial;
    Eigen::SelfAdjointEigenSolver<oracle::Mat> before(dense(op)), after(dense(cur));
    ASSERT_LT((before.eigenvalues() - after.eigenvalues()).cwiseAbs().maxCoeff(), 1e-9);
  }
}
