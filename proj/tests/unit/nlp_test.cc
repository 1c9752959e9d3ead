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

#include "maxcard/nlp.h"

#include <gtest/gtest.h>

#include <cmath>

namespace maxcard {
namespace {

TEST(NlpTest, XLogX) {
  EXPECT_DOUBLE_EQ(XLogX(0.0), 0.0);
  EXPECT_DOUBLE_EQ(XLogX(1.0), 0.0);
  EXPECT_NEAR(XLogX(0.5), 0.5 * std::log(0.5), 1e-16);
}

TEST(NlpTest, ClosedFormOptimum) {
  const NlpSolution sol = SolveNlp(0.01, 1e-6);
  EXPECT_NEAR(sol.closed_form.x, 0.7175647232498953, 1e-10);
  EXPECT_NEAR(sol.closed_form.y, 0.6797340976393191, 1e-10);
  EXPECT_NEAR(sol.closed_form.z, 0.5143090695956714, 1e-10);
  EXPECT_NEAR(StationarityResidual(sol.closed_form.x), 0.0, 1e-12);
  EXPECT_LE(sol.equalization_gap, 1e-9);
  EXPECT_NEAR(sol.numeric.x, sol.closed_form.x, 1e-6);
  EXPECT_NEAR(sol.numeric.z, sol.closed_form.z, 1e-6);
}

TEST(NlpTest, SpuriousRootIsRejected) {
  const NlpSolution sol = SolveNlp(0.01, 1e-6);
  EXPECT_NEAR(sol.spurious_root, 0.06290731110545347, 1e-9);
  EXPECT_TRUE(sol.spurious_root_rejected);
  EXPECT_GE(NlpF1(sol.spurious_root, 0.5), 1.0 - 1.0 / std::exp(1.0));
}

TEST(NlpTest, FineGridCertifiesBound) {
  const GridScan scan = ScanGrid(0.001, 1.0, 10.0, 0.514, 4);
  EXPECT_EQ(scan.below_threshold, 0);
  EXPECT_EQ(scan.points, 1001LL * 10001LL);
  EXPECT_NEAR(scan.min.z, 0.5143212829507731, 1e-12);
  EXPECT_NEAR(scan.min.x, 0.72, 1e-12);
  EXPECT_NEAR(scan.min.y, 0.676, 1e-12);
  EXPECT_LT(scan.min.z - 0.5143090695956714, 1e-4);
}

TEST(NlpTest, GridIsDeterministicAcrossWorkers) {
  const GridScan a = ScanGrid(0.01, 1.0, 10.0, 0.514, 1);
  const GridScan b = ScanGrid(0.01, 1.0, 10.0, 0.514, 7);
  EXPECT_EQ(a.min.x, b.min.x);
  EXPECT_EQ(a.min.y, b.min.y);
  EXPECT_EQ(a.min.z, b.min.z);
}

TEST(NlpTest, AuditBoundsAtExtremes) {
  EXPECT_DOUBLE_EQ(GreedyPrefixBound(0.0, 2.0), 2.0);
  EXPECT_DOUBLE_EQ(GreedyPrefixBound(1.0, 2.0), 2.0);
  EXPECT_NEAR(GreedyPrefixBound(std::exp(-1.0), 1.0), 1.0 - std::exp(-1.0),
              1e-15);
  const double c = 1.0 - std::exp(-1.0);
  EXPECT_NEAR(BoundX(0.0, 1.0, 2.0, 1.0), c * 2.0 + std::exp(-1.0), 1e-15);
  EXPECT_NEAR(BoundY(0.0, 1.0, 2.0), c + std::exp(-1.0) / 2.0, 1e-15);
}

}  // namespace
}  // namespace maxcard
