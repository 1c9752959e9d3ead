// Copyright 2020 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "maxcard/coverage.h"

#include <gtest/gtest.h>

#include <cmath>
#include <memory>
#include <random>

#include "maxcard/solvers.h"

namespace maxcard {
namespace {

TEST(WeightedCoverageTest, Values) {
  const WeightedCoverageFn f({1, 2, 3}, {{0, 1}, {1, 2}, {2}});
  EXPECT_DOUBLE_EQ(f.Evaluate(ElementSet{}), 0.0);
  EXPECT_DOUBLE_EQ(f.Evaluate(ElementSet{0}), 3.0);
  EXPECT_DOUBLE_EQ(f.Evaluate(ElementSet{0, 1}), 6.0);
  EXPECT_DOUBLE_EQ(f.Evaluate(ElementSet{1, 2}), 5.0);
}

TEST(WeightedCoverageTest, LargeUniverseMatchesDirectCount) {
  std::vector<double> weights(100);
  for (int u = 0; u < 100; ++u) weights[u] = 0.5 + u;
  std::vector<std::vector<int>> sets(3);
  for (int u = 0; u < 100; ++u) sets[u % 3].push_back(u);
  sets[0].push_back(1);
  const WeightedCoverageFn f(weights, sets);
  double expected = 0.0;
  for (int u = 0; u < 100; ++u) {
    if (u % 3 == 0 || u % 3 == 2 || u == 1) expected += weights[u];
  }
  EXPECT_NEAR(f.Evaluate(ElementSet{0, 2}), expected, 1e-9);
}

TEST(FractionalCoverageTest, Values) {
  const FractionalCoverageFn f({1.0, 2.0}, {{0.5, 0.0}, {0.5, 1.0}});
  EXPECT_DOUBLE_EQ(f.Evaluate(ElementSet{0}), 0.5);
  EXPECT_DOUBLE_EQ(f.Evaluate(ElementSet{1}), 2.5);
  EXPECT_DOUBLE_EQ(f.Evaluate(ElementSet{0, 1}), 2.75);
}

FractionalCoverageFn RandomFractional(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> size(1, 8);
  std::uniform_int_distribution<int> points(1, 5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int n = size(rng);
  const int m = points(rng);
  std::vector<double> weights(m);
  for (double& w : weights) w = 0.1 + unit(rng);
  std::vector<std::vector<double>> prob(n, std::vector<double>(m));
  for (auto& row : prob) {
    for (double& p : row) {
      const double r = unit(rng);
      p = r < 0.3 ? 0.0 : (r > 0.9 ? 1.0 : unit(rng));
    }
  }
  return FractionalCoverageFn(weights, prob);
}

TEST(ConversionTest, WeightedFormAgreesOnAllSubsets) {
  std::mt19937_64 rng(20201);
  for (int trial = 0; trial < 20; ++trial) {
    const FractionalCoverageFn f = RandomFractional(rng);
    const WeightedCoverageFn g = FractionalToWeighted(f);
    ASSERT_EQ(g.ground_size(), f.ground_size());
    const int n = f.ground_size();
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
      ElementSet s;
      for (int v = 0; v < n; ++v) {
        if (mask >> v & 1u) s.push_back(v);
      }
      ASSERT_NEAR(g.Evaluate(s), f.Evaluate(s), 1e-9);
    }
  }
}

TEST(ConversionTest, FractionalCoverageIsMonotoneSubmodular) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    auto f = std::make_shared<FractionalCoverageFn>(RandomFractional(rng));
    const ValueOracle oracle(f);
    EXPECT_TRUE(CheckMonotoneSubmodular(oracle, Range(f->ground_size())).passed);
  }
}

}  // namespace
}  // namespace maxcard
