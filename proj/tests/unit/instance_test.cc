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

#include "maxcard/instance.h"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "maxcard/coverage.h"
#include "maxcard/errors.h"
#include "maxcard/solvers.h"

namespace maxcard {
namespace {

void ExpectSameValues(const Instance& a, const Instance& b) {
  const int n = a.partition.ground_size();
  ASSERT_EQ(n, b.partition.ground_size());
  for (uint32_t mask = 0; mask < (1u << std::min(n, 12)); ++mask) {
    ElementSet s;
    for (int e = 0; e < std::min(n, 12); ++e) {
      if (mask >> e & 1u) s.push_back(e);
    }
    ASSERT_DOUBLE_EQ(a.function->Evaluate(s), b.function->Evaluate(s));
  }
}

TEST(InstanceJsonTest, RoundTripsEveryKind) {
  for (const std::string& kind : GeneratorKinds()) {
    GeneratorSpec spec;
    spec.kind = kind;
    spec.ground = 9;
    const Instance inst = GenerateInstance(spec, 5, 0);
    const Json j = InstanceToJson(inst);
    const Instance back = InstanceFromJson(j);
    EXPECT_EQ(back.id, inst.id);
    EXPECT_EQ(back.k, inst.k);
    EXPECT_EQ(back.partition.blocks(), inst.partition.blocks());
    EXPECT_EQ(back.partition.private_sets(), inst.partition.private_sets());
    ExpectSameValues(inst, back);
    EXPECT_EQ(InstanceToJson(back).dump(), j.dump()) << kind;
  }
}

TEST(InstanceJsonTest, FieldOrderIsStable) {
  GeneratorSpec spec;
  spec.kind = "hardness";
  const Json j = InstanceToJson(GenerateInstance(spec, 1, 0));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"instance_id", "k", "ground_size",
                                            "blocks", "private_sets",
                                            "function"}));
  EXPECT_EQ(j["ground_size"], 9);
  EXPECT_EQ(j["blocks"].size(), 3u);
  EXPECT_EQ(j["function"]["kind"], "hardness");
}

TEST(InstanceJsonTest, FractionalCoverageKind) {
  auto fn = std::make_shared<FractionalCoverageFn>(
      std::vector<double>{1.0, 2.0},
      std::vector<std::vector<double>>{{0.5, 0.0}, {0.25, 1.0}});
  const Instance inst{"frac", 1, Partition::TwoPlayer(2, {0}, {0}, {1}), fn};
  const Instance back = InstanceFromJson(InstanceToJson(inst));
  EXPECT_DOUBLE_EQ(back.function->Evaluate(ElementSet{0, 1}),
                   fn->Evaluate(ElementSet{0, 1}));
}

TEST(InstanceJsonTest, RejectsBadInput) {
  Json j = InstanceToJson(GenerateInstance(GeneratorSpec{}, 1, 0));
  j["function"]["kind"] = "mystery";
  EXPECT_THROW(InstanceFromJson(j), PreconditionError);
  Json k = InstanceToJson(GenerateInstance(GeneratorSpec{}, 1, 0));
  k["ground_size"] = 3;
  EXPECT_THROW(InstanceFromJson(k), PreconditionError);
  EXPECT_THROW(GenerateInstance(GeneratorSpec{"mystery"}, 1, 0),
               PreconditionError);
}

TEST(GeneratorTest, SeedReplayIsByteIdentical) {
  GeneratorSpec spec;
  spec.count = 4;
  const std::string path = ::testing::TempDir() + "/gen_a.json";
  const std::string other = ::testing::TempDir() + "/gen_b.json";
  SaveInstances(path, GenerateInstances(spec, 77));
  SaveInstances(other, GenerateInstances(spec, 77));
  std::stringstream a, b;
  a << std::ifstream(path).rdbuf();
  b << std::ifstream(other).rdbuf();
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(LoadInstances(path).size(), 4u);
  SaveInstances(other, GenerateInstances(spec, 78));
  std::stringstream c;
  c << std::ifstream(other).rdbuf();
  EXPECT_NE(a.str(), c.str());
}

TEST(GeneratorTest, CoverageIsSubmodular) {
  GeneratorSpec spec;
  spec.ground = 12;
  const Instance inst = GenerateInstance(spec, 3, 0);
  EXPECT_EQ(inst.partition.ground_size(), 12);
  EXPECT_TRUE(
      CheckMonotoneSubmodular(ValueOracle(inst.function), Range(12)).passed);
}

TEST(GeneratorTest, AdversarialSplitHalvesTheOptimum) {
  GeneratorSpec spec;
  spec.kind = "adversarial";
  spec.ground = 12;
  spec.k = 4;
  const Instance inst = GenerateInstance(spec, 3, 0);
  const ValueOracle oracle(inst.function);
  const double opt =
      BruteForceOpt(oracle, inst.partition.AllPrivate(), 4).value;
  const double alice =
      BruteForceOpt(oracle, inst.partition.private_set(0), 4).value;
  EXPECT_GE(opt, 4.0);
  EXPECT_LT(alice, 0.5 * opt + 0.35);
}

TEST(GeneratorTest, DeskSuiteRanges) {
  for (const Instance& inst : DeskSuite(60, 5)) {
    EXPECT_LE(inst.partition.ground_size(), 16);
    EXPECT_GE(inst.partition.ground_size(), 6);
    EXPECT_GE(inst.k, 1);
    EXPECT_LE(inst.k, 4);
    EXPECT_EQ(inst.partition.num_blocks(), 2);
  }
}

}  // namespace
}  // namespace maxcard
