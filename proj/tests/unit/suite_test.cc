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

#include "maxcard/suite.h"

#include <gtest/gtest.h>

#include <sstream>

#include "maxcard/audit.h"
#include "maxcard/errors.h"
#include "maxcard/protocols.h"
#include "maxcard/solvers.h"

namespace maxcard {
namespace {

TEST(SuiteTest, DeskSuitePasses) {
  SuiteConfig config;
  config.protocols = TwoPlayerProtocolNames();
  config.workers = 2;
  const SuiteResult result = RunSuite(DeskSuite(40, 3), config);
  EXPECT_TRUE(result.passed());
  for (const std::string& f : result.failures) ADD_FAILURE() << f;
  EXPECT_EQ(result.rows.size(), 40u * 5u);
  EXPECT_EQ(result.rows[0].instance_id, "desk-coverage-0");
  EXPECT_EQ(result.rows[5].instance_id, "desk-adversarial-1");
}

TEST(SuiteTest, RerunsAreIdentical) {
  SuiteConfig config;
  config.protocols = {"p1", "p3"};
  config.workers = 1;
  const auto instances = DeskSuite(10, 8);
  std::ostringstream a, b;
  WriteCsv(a, RunSuite(instances, config).rows);
  config.workers = 4;
  WriteCsv(b, RunSuite(instances, config).rows);
  EXPECT_EQ(a.str(), b.str());
}

TEST(SuiteTest, SabotagedFloorFails) {
  SuiteConfig config;
  config.protocols = {"half"};
  config.ratio_floor = 0.99;
  EXPECT_FALSE(RunSuite(DeskSuite(20, 3), config).passed());
}

TEST(SuiteTest, EmptyProtocolListIsRejected) {
  EXPECT_THROW(RunSuite(DeskSuite(1, 1), SuiteConfig{}), PreconditionError);
  SuiteConfig config;
  config.protocols = {"bogus"};
  EXPECT_THROW(RunSuite(DeskSuite(1, 1), config), PreconditionError);
}

TEST(SuiteTest, CsvHeaderIsFixed) {
  EXPECT_EQ(CsvHeader(),
            "instance_id,protocol,value,opt,ratio,msg_elements,msg_bytes,"
            "max_query_card,queries");
  SuiteRow row;
  row.instance_id = "x";
  row.protocol = "p3";
  row.value = 1.5;
  row.opt = 2;
  row.ratio = 0.75;
  row.msg_elements = 4;
  row.msg_bytes = 32;
  row.max_query_card = 5;
  row.queries = 17;
  EXPECT_EQ(CsvLine(row), "x,p3,1.5,2,0.75,4,32,5,17");
}

TEST(AuditTest, QuantitiesOnDeskInstances) {
  for (const Instance& inst : DeskSuite(30, 21)) {
    const ValueOracle oracle(inst.function);
    const int k = inst.k;
    const Solution opt = BruteForceOpt(oracle, inst.partition.AllPrivate(), k);
    const EfficientAudit audit =
        AuditEfficientProtocol(oracle, inst.partition, k, opt.elements);
    EXPECT_TRUE(audit.passed()) << inst.id;
    EXPECT_GE(audit.delta_a, 0.0);
    EXPECT_LE(audit.delta_a, 1.0);
    EXPECT_EQ(static_cast<int>(audit.g_a.size()), audit.k_a);
    EXPECT_NEAR(audit.f_o, opt.value, 1e-12);
  }
}

}  // namespace
}  // namespace maxcard
