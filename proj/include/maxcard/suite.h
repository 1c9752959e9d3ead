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

#ifndef MAXCARD_SUITE_H_
#define MAXCARD_SUITE_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "maxcard/instance.h"

namespace maxcard {

struct SuiteConfig {
  std::vector<std::string> protocols;
  int k = 0;  // 0: use each instance's k
  double eps = 0.1;
  // Replaces every protocol's advertised ratio as the floor when set.
  std::optional<double> ratio_floor;
  bool audit = true;
  int workers = 1;
};

struct SuiteRow {
  std::string instance_id;
  std::string protocol;
  int k = 0;
  double value = 0.0;
  double opt = 0.0;
  double ratio = 0.0;
  int64_t msg_elements = 0;
  int64_t msg_bytes = 0;
  int max_query_card = 0;
  int64_t queries = 0;
  bool audited = false;
  bool audit_ok = true;
};

struct SuiteResult {
  std::vector<SuiteRow> rows;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

// Runs every protocol on every instance against a brute-force optimum and
// checks: ratio >= floor - 1e-9, message size within the advertised bound
// (exactly min(2k, |V_A|) for p3), the infeasible-query flag where it is
// forced, and the efficient protocol's per-run bounds. Rows follow the
// instance order. Throws PreconditionError for an empty protocol list.
SuiteResult RunSuite(const std::vector<Instance>& instances,
                     const SuiteConfig& config);

struct RobustTrial {
  ElementSet deleted;
  int copy = 0;
  int64_t stored_elements = 0;
  double value = 0.0;
  double opt_after = 0.0;  // best k-subset of V minus D
  double ratio = 0.0;
  bool disjoint = false;
  bool feasible = false;
  bool size_ok = false;
  bool ratio_ok = false;
  bool passed() const { return disjoint && feasible && size_ok && ratio_ok; }
};

// Builds the d+1 copy summary of `protocol` over all elements of the
// instance, deletes the adversary's choice and compares the answer with the
// brute-force optimum after deletion.
RobustTrial RunRobustTrial(const Instance& inst, const std::string& protocol,
                           int k, double eps, int d, AdversaryKind adversary,
                           uint64_t seed);

std::string CsvHeader();
std::string CsvLine(const SuiteRow& row);
void WriteCsv(std::ostream& out, const std::vector<SuiteRow>& rows);

}  // namespace maxcard

#endif  // MAXCARD_SUITE_H_
