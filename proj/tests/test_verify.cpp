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

#include "gtest/gtest.h"

using namespace gibbsforge;

namespace {

void expect_all_ok(const std::vector<Verdict>& verdicts) {
  ASSERT_FALSE(verdicts.empty());
  for (const auto& v : verdicts) EXPECT_TRUE(v.ok) << v.to_json().dump();
}

}  // namespace

TEST(verify, benchmark_corpus) {
  const auto all = benchmark_programs(8);
  EXPECT_GE(all.size(), 20u);
  for (const auto& p : all) EXPECT_LE(p.program.n, 8) << p.name;
  EXPECT_LT(benchmark_programs(4).size(), all.size());
}

TEST(verify, connected_patch_is_connected_prefix) {
  const LatticeGraph g = raussendorf_graph(1);
  const auto patch = connected_patch(g, 8);
  EXPECT_EQ(patch.size(), 8u);
  EXPECT_EQ(patch[0], 0);
  EXPECT_THROW(connected_patch(g, 19), InputError);
}

TEST(verify, thresholds_suite) { expect_all_ok(verify_thresholds({})); }

TEST(verify, lemmas_suite) {
  SuiteOptions o;
  o.trials = 200;
  expect_all_ok(verify_lemmas(o));
}

TEST(verify, encoding_suite) { expect_all_ok(verify_encoding({})); }

TEST(verify, equivalence_suite_small) {
  SuiteOptions o;
  o.max_n = 5;
  o.shots = 20000;
  const auto v = verify_equivalence(o);
  expect_all_ok(v);
}

TEST(verify, verdict_json_shape) {
  const auto v = verify_thresholds({}).front();
  const auto j = v.to_json();
  EXPECT_EQ(j["check"], "hardness_threshold");
  EXPECT_TRUE(j["inputs"].is_object());
  EXPECT_TRUE(j["values"].is_object());
  EXPECT_TRUE(j["ok"].is_boolean());
  EXPECT_THROW(run_suite("everything", {}), InputError);
}
