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

#include <algorithm>
#include <cstdio>
#include <mutex>

#include "maxcard/audit.h"
#include "maxcard/errors.h"
#include "maxcard/protocols.h"
#include "maxcard/seeding.h"
#include "maxcard/solvers.h"

namespace maxcard {
namespace {

inline constexpr double kRatioSlack = 1e-9;

// Largest set size Alice's brute force or greedy reaches, for the
// protocols that must query beyond k.
int ForcedQuerySize(const std::string& name, int k, double eps) {
  if (name == "p1" || name == "p3") return 2 * k;
  if (name == "p1g") {
    const std::vector<int> sizes = GroupedSizes(k, eps);
    return sizes.back();
  }
  return 0;
}

std::string Fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::vector<std::string> CheckRun(const Instance& inst, const SuiteConfig& config,
                                  const ProtocolSpec& spec, int k,
                                  const Solution& opt, SuiteRow& row) {
  std::vector<std::string> failures;
  auto fail = [&](const std::string& what) {
    failures.push_back(inst.id + " " + spec.name + ": " + what);
  };
  const ValueOracle oracle(inst.function);
  const Transcript transcript = RunPlayers(spec, inst.partition, oracle, k);
  row.value = transcript.value;
  row.opt = opt.value;
  row.ratio = opt.value > 0.0 ? transcript.value / opt.value : 1.0;
  row.msg_elements = transcript.MaxMessageElements();
  row.msg_bytes = transcript.MaxMessageBytes();
  row.max_query_card = transcript.MaxQueryCardinality();
  row.queries = transcript.TotalQueries();

  const double floor = config.ratio_floor.value_or(spec.guarantee);
  if (transcript.value < floor * opt.value - kRatioSlack * std::max(1.0, opt.value)) {
    fail("ratio " + Fmt(row.ratio) + " below " + Fmt(floor));
  }
  if (row.msg_elements > spec.message_bound + 1e-9) {
    fail("message of " + std::to_string(row.msg_elements) +
         " elements exceeds " + Fmt(spec.message_bound));
  }
  if (inst.partition.num_blocks() != 2) return failures;

  const int v_a = static_cast<int>(inst.partition.private_set(0).size());
  if (spec.name == "p3" &&
      row.msg_elements != std::min(2 * k, v_a)) {
    fail("message of " + std::to_string(row.msg_elements) +
         " elements, expected " + std::to_string(std::min(2 * k, v_a)));
  }
  const int alice_max = transcript.ledgers.front().max_cardinality;
  if (spec.feasible_queries_only && row.max_query_card > k) {
    fail("queried a set of " + std::to_string(row.max_query_card) +
         " elements");
  }
  const int forced = std::min(ForcedQuerySize(spec.name, k, config.eps), v_a);
  if (forced > k && alice_max <= k) {
    fail("never queried beyond k");
  }
  if (spec.name == "p3" && config.audit) {
    const ValueOracle audit_oracle(inst.function);
    const EfficientAudit audit =
        AuditEfficientProtocol(audit_oracle, inst.partition, k, opt.elements);
    row.audited = true;
    row.audit_ok = audit.passed();
    if (!audit.prefix_ok) fail("greedy prefix bound violated");
    if (!audit.x_ok) fail("X bound violated");
    if (!audit.y_ok) fail("Y bound violated");
  }
  return failures;
}

}  // namespace

SuiteResult RunSuite(const std::vector<Instance>& instances,
                     const SuiteConfig& config) {
  if (config.protocols.empty()) {
    throw PreconditionError("no protocols given");
  }
  for (const std::string& name : config.protocols) {
    MakeProtocol(name, 1, config.eps);
  }
  const int np = static_cast<int>(config.protocols.size());
  std::vector<std::vector<SuiteRow>> rows(instances.size());
  std::vector<std::vector<std::string>> failures(instances.size());
  ParallelFor(
      static_cast<int>(instances.size()),
      [&](int i) {
        const Instance& inst = instances[i];
        int k = config.k > 0 ? config.k : inst.k;
        k = std::clamp(k, 1, std::max(1, inst.partition.ground_size()));
        Solution opt;
        try {
          const ValueOracle oracle(inst.function);
          opt = BruteForceOpt(oracle, inst.partition.AllPrivate(), k);
        } catch (const Error& e) {
          failures[i].push_back(inst.id + ": optimum unavailable: " +
                                e.what());
          return;
        }
        for (int j = 0; j < np; ++j) {
          SuiteRow row;
          row.instance_id = inst.id;
          row.protocol = config.protocols[j];
          row.k = k;
          try {
            const ProtocolSpec spec =
                MakeProtocol(config.protocols[j], k, config.eps);
            for (std::string& f : CheckRun(inst, config, spec, k, opt, row)) {
              failures[i].push_back(std::move(f));
            }
          } catch (const Error& e) {
            failures[i].push_back(inst.id + " " + row.protocol + ": " +
                                  e.what());
          }
          rows[i].push_back(std::move(row));
        }
      },
      config.workers);
  SuiteResult result;
  for (size_t i = 0; i < instances.size(); ++i) {
    for (SuiteRow& r : rows[i]) result.rows.push_back(std::move(r));
    for (std::string& f : failures[i]) result.failures.push_back(std::move(f));
  }
  return result;
}

RobustTrial RunRobustTrial(const Instance& inst, const std::string& protocol,
                           int k, double eps, int d, AdversaryKind adversary,
                           uint64_t seed) {
  const ProtocolSpec spec = MakeProtocol(protocol, k, eps);
  const ValueOracle oracle(inst.function);
  const ElementSet ground = Range(inst.partition.ground_size());
  const RobustSummary summary = BuildSummary(oracle, ground, k, d, spec);
  RobustTrial trial;
  trial.stored_elements = summary.StoredElements();
  trial.size_ok =
      trial.stored_elements <= (d + 1) * spec.message_bound + 1e-9;
  trial.disjoint = true;
  ElementSet seen;
  for (const ElementSet& m : summary.sets) {
    trial.disjoint = trial.disjoint && Disjoint(seen, m);
    seen = SetUnion(seen, m);
  }
  trial.deleted = Adversary(adversary, summary, oracle, spec, seed);
  const RobustAnswer answer =
      QuerySummary(summary, oracle, spec, trial.deleted);
  trial.copy = answer.copy;
  trial.value = answer.value;
  trial.feasible = Disjoint(answer.solution, trial.deleted) &&
                   IsSubset(answer.solution, ground) &&
                   static_cast<int>(answer.solution.size()) <= k;
  trial.opt_after =
      BruteForceOpt(oracle, SetDifference(ground, trial.deleted), k).value;
  trial.ratio = trial.opt_after > 0.0 ? trial.value / trial.opt_after : 1.0;
  trial.ratio_ok = trial.value >= spec.guarantee * trial.opt_after -
                                      kRatioSlack *
                                          std::max(1.0, trial.opt_after);
  return trial;
}

std::string CsvHeader() {
  return "instance_id,protocol,value,opt,ratio,msg_elements,msg_bytes,"
         "max_query_card,queries";
}

std::string CsvLine(const SuiteRow& row) {
  return row.instance_id + "," + row.protocol + "," + Fmt(row.value) + "," +
         Fmt(row.opt) + "," + Fmt(row.ratio) + "," +
         std::to_string(row.msg_elements) + "," +
         std::to_string(row.msg_bytes) + "," +
         std::to_string(row.max_query_card) + "," +
         std::to_string(row.queries);
}

void WriteCsv(std::ostream& out, const std::vector<SuiteRow>& rows) {
  out << CsvHeader() << "\n";
  for (const SuiteRow& row : rows) out << CsvLine(row) << "\n";
}

}  // namespace maxcard
