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

#include "maxcard/oracle.h"

#include <gtest/gtest.h>

#include <memory>

#include "maxcard/coverage.h"
#include "maxcard/errors.h"

namespace maxcard {
namespace {

std::shared_ptr<const SetFunction> Modular(int n) {
  std::vector<double> weights(n);
  std::vector<std::vector<int>> sets(n);
  for (int i = 0; i < n; ++i) {
    weights[i] = i + 1.0;
    sets[i] = {i};
  }
  return std::make_shared<WeightedCoverageFn>(weights, sets);
}

TEST(OracleTest, EvaluatesAndRecords) {
  ValueOracle oracle(Modular(4));
  EXPECT_DOUBLE_EQ(oracle.Evaluate({0, 3}), 5.0);
  EXPECT_DOUBLE_EQ(oracle.Evaluate({3, 0, 3}), 5.0);
  EXPECT_DOUBLE_EQ(oracle.Marginal(1, ElementSet{0}), 2.0);
  EXPECT_EQ(oracle.ledger().queries(), 4);
  EXPECT_EQ(oracle.ledger().max_cardinality(), 2);
  EXPECT_FALSE(oracle.ledger().UsedInfeasibleQuery(2));
  EXPECT_TRUE(oracle.ledger().UsedInfeasibleQuery(1));
}

TEST(OracleTest, RestrictSharesLedgerAndRejectsOutsideQueries) {
  ValueOracle oracle(Modular(5));
  const ElementSet sub{1, 2};
  ValueOracle restricted = oracle.Restrict(sub);
  EXPECT_DOUBLE_EQ(restricted.Evaluate({1, 2}), 5.0);
  EXPECT_THROW(restricted.Evaluate({0}), DomainError);
  EXPECT_THROW(oracle.Evaluate({7}), DomainError);
  EXPECT_EQ(oracle.ledger().queries(), 1);
  EXPECT_TRUE(restricted.InDomain(2));
  EXPECT_FALSE(restricted.InDomain(3));
}

TEST(OracleTest, ChildLedgerForwardsToParent) {
  ValueOracle oracle(Modular(3));
  ValueOracle child = oracle.WithChildLedger();
  child.Evaluate({0, 1, 2});
  EXPECT_EQ(child.ledger().queries(), 1);
  EXPECT_EQ(oracle.ledger().queries(), 1);
  EXPECT_EQ(oracle.ledger().max_cardinality(), 3);
  oracle.Evaluate({0});
  EXPECT_EQ(child.ledger().queries(), 1);
}

TEST(OracleTest, CardinalityConstraintValidates) {
  EXPECT_NO_THROW(CardinalityConstraint{2}.Validate(5));
  EXPECT_THROW(CardinalityConstraint{-1}.Validate(5), PreconditionError);
}

}  // namespace
}  // namespace maxcard
