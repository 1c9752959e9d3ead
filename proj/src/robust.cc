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

#include <algorithm>
#include <random>

#include "maxcard/errors.h"
#include "maxcard/seeding.h"

namespace maxcard {

int64_t RobustSummary::StoredElements() const {
  int64_t total = 0;
  for (const Message& m : messages) total += m.ElementCount();
  return total;
}

RobustSummary BuildSummary(const ValueOracle& oracle, const ElementSet& ground,
                           int k, int d, const ProtocolSpec& spec) {
  if (d < 0) throw PreconditionError("deletion budget must be >= 0");
  if (!IsNormalized(ground)) throw PreconditionError("ground not normalized");
  RobustSummary summary;
  summary.d = d;
  summary.k = k;
  summary.protocol = spec.name;
  summary.ground = ground;
  ElementSet used;
  for (int i = 0; i <= d; ++i) {
    const ElementSet input = SetDifference(ground, used);
    Message message = RunSender(spec, oracle, input, nullptr, 0, 2, k);
    ElementSet m = message.Distinct();
    if (!Disjoint(m, used)) {
      throw DisagreementError("summary copies are not disjoint");
    }
    used = SetUnion(used, m);
    summary.messages.push_back(std::move(message));
    summary.sets.push_back(std::move(m));
  }
  return summary;
}

RobustAnswer QuerySummary(const RobustSummary& summary,
                          const ValueOracle& oracle, const ProtocolSpec& spec,
                          const ElementSet& deleted) {
  if (!IsNormalized(deleted) ||
      static_cast<int>(deleted.size()) > summary.d) {
    throw PreconditionError("deletion set larger than the budget");
  }
  if (!IsSubset(deleted, summary.ground)) {
    throw PreconditionError("deletion set leaves the ground set");
  }
  int l = 0;
  while (l < static_cast<int>(summary.sets.size()) &&
         !Disjoint(summary.sets[l], deleted)) {
    ++l;
  }
  if (l == static_cast<int>(summary.sets.size())) {
    throw DisagreementError("no summary copy avoids the deletions");
  }
  ElementSet bob;
  for (int j = 0; j < l; ++j) bob = SetUnion(bob, summary.sets[j]);
  bob = SetDifference(bob, deleted);
  RobustAnswer answer;
  answer.copy = l;
  answer.solution =
      RunDecider(spec, oracle, bob, &summary.messages[l], 1, 2, summary.k);
  if (!Disjoint(answer.solution, deleted) ||
      static_cast<int>(answer.solution.size()) > summary.k) {
    throw DisagreementError("robust answer is infeasible");
  }
  answer.value = oracle.function()->Evaluate(answer.solution);
  return answer;
}

AdversaryKind ParseAdversary(const std::string& name) {
  if (name == "random") return AdversaryKind::kRandom;
  if (name == "greedy-damage") return AdversaryKind::kGreedyDamage;
  throw PreconditionError("unknown adversary: " + name);
}

ElementSet Adversary(AdversaryKind kind, const RobustSummary& summary,
                     const ValueOracle& oracle, const ProtocolSpec& spec,
                     uint64_t seed) {
  const ElementSet& ground = summary.ground;
  const int d = std::min(summary.d, static_cast<int>(ground.size()));
  if (kind == AdversaryKind::kRandom) {
    std::mt19937_64 rng = MakeRng(seed, 0);
    ElementSet pool = ground;
    for (int i = 0; i < d; ++i) {
      std::uniform_int_distribution<size_t> pick(i, pool.size() - 1);
      std::swap(pool[i], pool[pick(rng)]);
    }
    pool.resize(d);
    return Normalize(std::move(pool));
  }
  if (static_cast<int>(ground.size()) > kGreedyAdversaryGuard) {
    throw GuardExceededError("greedy-damage adversary needs |V| <= 20");
  }
  ElementSet deleted;
  for (int round = 0; round < d; ++round) {
    Element best = -1;
    double best_value = 0.0;
    for (Element e : SetDifference(ground, deleted)) {
      const Element single[1] = {e};
      const double v =
          QuerySummary(summary, oracle, spec, SetUnion(deleted, single)).value;
      if (best < 0 || v < best_value - kValueTolerance) {
        best = e;
        best_value = v;
      }
    }
    const Element single[1] = {best};
    deleted = SetUnion(deleted, single);
  }
  return deleted;
}

}  // namespace maxcard
