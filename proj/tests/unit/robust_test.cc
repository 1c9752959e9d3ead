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

#include "maxcard/robust.h"

#include <gtest/gtest.h>

#include <memory>

#include "maxcard/coverage.h"
#include "maxcard/errors.h"
#include "maxcard/instance.h"
#include "maxcard/protocols.h"
#include "maxcard/solvers.h"
#include "maxcard/suite.h"

namespace maxcard {
namespace {

std::shared_ptr<const SetFunction> Modular(std::vector<double> weights) {
  std::vector<std::vector<int>> sets(weights.size());
  for (size_t i = 0; i < sets.size(); ++i) sets[i] = {static_cast<int>(i)};
  return std::make_shared<WeightedCoverageFn>(weights, sets);
}

TEST(RobustTest, ZeroBudgetIsPlainProtocol) {
  const auto fn = Modular({1, 2, 3, 4, 5, 6, 7, 8});
  const ValueOracle oracle(fn);
  const ProtocolSpec spec = Protocol3Poly(2);
  const RobustSummary summary = BuildSummary(oracle, Range(8), 2, 0, spec);
  ASSERT_EQ(summary.messages.size(), 1u);
  EXPECT_EQ(summary.messages[0].elements, (std::vector<Element>{7, 6, 5, 4}));
  const RobustAnswer answer = QuerySummary(summary, oracle, spec, {});
  EXPECT_EQ(answer.copy, 0);
  EXPECT_EQ(answer.solution, (ElementSet{6, 7}));
  EXPECT_EQ(Adversary(AdversaryKind::kRandom, summary, oracle, spec, 1),
            ElementSet{});
}

TEST(RobustTest, CopiesAreDisjointAndBounded) {
  const auto fn = Modular({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14});
  const ValueOracle oracle(fn);
  const ProtocolSpec spec = Protocol3Poly(3);
  const RobustSummary summary = BuildSummary(oracle, Range(14), 3, 2, spec);
  ASSERT_EQ(summary.sets.size(), 3u);
  EXPECT_TRUE(Disjoint(summary.sets[0], summary.sets[1]));
  EXPECT_TRUE(Disjoint(summary.sets[0], summary.sets[2]));
  EXPECT_TRUE(Disjoint(summary.sets[1], summary.sets[2]));
  EXPECT_LE(summary.StoredElements(), 18);
  EXPECT_EQ(summary.sets[1], (ElementSet{2, 3, 4, 5, 6, 7}));
}

TEST(RobustTest, DeletingFirstSetSelectsSecondCopy) {
  const auto fn = Modular({1, 2, 3, 4, 5, 6});
  const ValueOracle oracle(fn);
  const ProtocolSpec spec = Protocol3Poly(1);
  const RobustSummary summary = BuildSummary(oracle, Range(6), 1, 2, spec);
  ASSERT_EQ(summary.sets[0], (ElementSet{4, 5}));
  const RobustAnswer answer = QuerySummary(summary, oracle, spec, {4, 5});
  EXPECT_EQ(answer.copy, 1);
  EXPECT_EQ(answer.solution, (ElementSet{3}));
  EXPECT_THROW(QuerySummary(summary, oracle, spec, {0, 1, 2}),
               PreconditionError);
}

TEST(RobustTest, GreedyDamageDeletesSoleValuableElement) {
  std::vector<double> weights(8, 0.01);
  weights[5] = 10.0;
  const auto fn = Modular(weights);
  const ValueOracle oracle(fn);
  const ProtocolSpec spec = Protocol1Exact(1);
  const RobustSummary summary = BuildSummary(oracle, Range(8), 1, 1, spec);
  const ElementSet d =
      Adversary(AdversaryKind::kGreedyDamage, summary, oracle, spec, 0);
  EXPECT_EQ(d, (ElementSet{5}));
}

TEST(RobustTest, RandomAdversaryIsSeeded) {
  const auto fn = Modular({1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
  const ValueOracle oracle(fn);
  const ProtocolSpec spec = Protocol3Poly(2);
  const RobustSummary summary = BuildSummary(oracle, Range(10), 2, 3, spec);
  const ElementSet a =
      Adversary(AdversaryKind::kRandom, summary, oracle, spec, 99);
  EXPECT_EQ(a.size(), 3u);
  EXPECT_EQ(a, Adversary(AdversaryKind::kRandom, summary, oracle, spec, 99));
  EXPECT_EQ(ParseAdversary("greedy-damage"), AdversaryKind::kGreedyDamage);
  EXPECT_THROW(ParseAdversary("other"), PreconditionError);
}

TEST(RobustTest, SummaryJsonRoundTrip) {
  const auto fn = Modular({1, 2, 3, 4, 5, 6});
  const ValueOracle oracle(fn);
  const ProtocolSpec spec = Protocol1Exact(1);
  const RobustSummary summary = BuildSummary(oracle, Range(6), 1, 1, spec);
  const RobustSummary back = SummaryFromJson(SummaryToJson(summary));
  EXPECT_EQ(back.sets, summary.sets);
  EXPECT_EQ(back.messages[1].aux, summary.messages[1].aux);
  EXPECT_EQ(QuerySummary(back, oracle, spec, {5}).solution,
            QuerySummary(summary, oracle, spec, {5}).solution);
}

TEST(RobustTest, RatioAgainstPostDeletionOptimum) {
  GeneratorSpec gen;
  gen.kind = "coverage";
  gen.ground = 10;
  for (int t = 0; t < 10; ++t) {
    const Instance inst = GenerateInstance(gen, 4, t);
    for (const char* protocol : {"p1", "p3"}) {
      for (AdversaryKind kind :
           {AdversaryKind::kRandom, AdversaryKind::kGreedyDamage}) {
        const RobustTrial trial =
            RunRobustTrial(inst, protocol, 2, 0.1, 2, kind, t);
        EXPECT_TRUE(trial.passed()) << inst.id << " " << protocol;
      }
    }
  }
}

}  // namespace
}  // namespace maxcard
