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

#include "maxcard/protocol.h"

#include <gtest/gtest.h>

#include <memory>

#include "maxcard/coverage.h"
#include "maxcard/errors.h"
#include "maxcard/hardness.h"
#include "maxcard/protocols.h"

namespace maxcard {
namespace {

std::shared_ptr<const SetFunction> Modular(std::vector<double> weights) {
  std::vector<std::vector<int>> sets(weights.size());
  for (size_t i = 0; i < sets.size(); ++i) sets[i] = {static_cast<int>(i)};
  return std::make_shared<WeightedCoverageFn>(weights, sets);
}

ProtocolSpec Rogue(SendProgram send, DecideProgram decide, int k) {
  ProtocolSpec spec;
  spec.name = "rogue";
  spec.k = k;
  spec.send = std::move(send);
  spec.decide = std::move(decide);
  return spec;
}

Message Empty(const PlayerContext&) { return Message{}; }
ElementSet Nothing(const PlayerContext&) { return {}; }

class ProtocolRuntimeTest : public ::testing::Test {
 protected:
  // Alice holds block {0,1,2} with private {0,1}; Bob holds {3,4,5}.
  Partition partition_ =
      Partition::TwoPlayer(6, {0, 1, 2}, {0, 1}, {3, 4, 5});
  ValueOracle oracle_{Modular({1, 2, 3, 4, 5, 6})};
};

TEST_F(ProtocolRuntimeTest, ModelPolicyLetsAliceQueryHerBlock) {
  const ProtocolSpec spec = Rogue(
      [](const PlayerContext& ctx) {
        ctx.oracle.Evaluate({2});
        return Message{};
      },
      Nothing, 1);
  EXPECT_NO_THROW(RunTwoPlayer(spec, partition_, oracle_, 1));
  EXPECT_THROW(
      RunTwoPlayer(spec, partition_, oracle_, 1, AccessPolicy::kStrict),
      AccessViolationError);
}

TEST_F(ProtocolRuntimeTest, AliceCannotQueryBobsBlock) {
  const ProtocolSpec spec = Rogue(
      [](const PlayerContext& ctx) {
        ctx.oracle.Evaluate({4});
        return Message{};
      },
      Nothing, 1);
  EXPECT_THROW(RunTwoPlayer(spec, partition_, oracle_, 1),
               AccessViolationError);
}

TEST_F(ProtocolRuntimeTest, MessagesMayOnlyMentionHeldElements) {
  const ProtocolSpec spec = Rogue(
      [](const PlayerContext&) { return Message{{2}, {}}; }, Nothing, 1);
  EXPECT_THROW(RunTwoPlayer(spec, partition_, oracle_, 1),
               AccessViolationError);
}

TEST_F(ProtocolRuntimeTest, OutputMustBeFeasible) {
  const ProtocolSpec too_big = Rogue(
      Empty, [](const PlayerContext&) { return ElementSet{3, 4}; }, 1);
  EXPECT_THROW(RunTwoPlayer(too_big, partition_, oracle_, 1),
               AccessViolationError);
  const ProtocolSpec unseen = Rogue(
      Empty, [](const PlayerContext&) { return ElementSet{0}; }, 1);
  EXPECT_THROW(RunTwoPlayer(unseen, partition_, oracle_, 1),
               AccessViolationError);
  const ProtocolSpec relayed = Rogue(
      [](const PlayerContext&) { return Message{{0}, {}}; },
      [](const PlayerContext&) { return ElementSet{0}; }, 1);
  EXPECT_DOUBLE_EQ(RunTwoPlayer(relayed, partition_, oracle_, 1).value, 1.0);
}

TEST_F(ProtocolRuntimeTest, SpecMustMatchK) {
  EXPECT_THROW(RunTwoPlayer(BaselineHalf(2), partition_, oracle_, 1),
               PreconditionError);
}

TEST_F(ProtocolRuntimeTest, TranscriptAccounting) {
  const Transcript t = RunTwoPlayer(Protocol3Poly(1), partition_, oracle_, 1);
  ASSERT_EQ(t.messages.size(), 1u);
  EXPECT_EQ(t.messages[0].elements, (std::vector<Element>{1, 0}));
  EXPECT_EQ(t.MaxMessageElements(), 2);
  EXPECT_EQ(t.MaxMessageBytes(), 16);
  EXPECT_EQ(t.solution, (ElementSet{5}));
  EXPECT_DOUBLE_EQ(t.value, 6.0);
  EXPECT_EQ(t.ledgers.size(), 2u);
  EXPECT_EQ(t.TotalQueries(), oracle_.ledger().queries());
  EXPECT_EQ(t.MaxQueryCardinality(), 2);
}

TEST(PlayerChainTest, EmptyMiddlePlayersPassThrough) {
  const auto fn = Modular({1, 2, 3, 4, 5});
  const ValueOracle oracle(fn);
  const Partition partition(5, {{0, 1}, {2}, {3}, {4}, {}},
                            {{0, 1}, {}, {}, {}, {}});
  const Transcript t =
      RunPlayers(ForwardAllExact(1), partition, oracle, 1);
  ASSERT_EQ(t.messages.size(), 4u);
  for (const Message& m : t.messages) {
    EXPECT_EQ(m.elements, (std::vector<Element>{0, 1}));
  }
  EXPECT_EQ(t.solution, (ElementSet{1}));
}

TEST(PlayerChainTest, TwoPlayersMatchTwoPlayerRun) {
  const auto fn = Modular({3, 1, 4, 1, 5, 9});
  const Partition partition =
      Partition::TwoPlayer(6, {0, 2, 4}, {0, 2, 4}, {1, 3, 5});
  const Transcript a =
      RunPlayers(Protocol1Exact(2), partition, ValueOracle(fn), 2);
  const Transcript b =
      RunTwoPlayer(Protocol1Exact(2), partition, ValueOracle(fn), 2);
  EXPECT_EQ(a.solution, b.solution);
  EXPECT_EQ(a.messages[0].elements, b.messages[0].elements);
}

TEST(PlayerChainTest, GreedyForwardingOnHardFamilyRespectsGap) {
  const auto f = std::make_shared<HardnessFn>(3, 3, std::vector<Element>{2, 5, 8});
  const Transcript t =
      RunPlayers(GreedyForwarding(3), f->FullPartition(), ValueOracle(f), 3);
  const double h = HarmonicNumber(3);
  if (Disjoint(t.solution, f->HiddenSet())) {
    EXPECT_LE(t.value, 3 + h * h + 1e-9);
  }
  EXPECT_LE(t.value, f->weights().Total() + 1e-9);
}

}  // namespace
}  // namespace maxcard
