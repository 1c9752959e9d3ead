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

#ifndef MAXCARD_ROBUST_H_
#define MAXCARD_ROBUST_H_

#include <cstdint>
#include <string>
#include <vector>

#include "maxcard/element_set.h"
#include "maxcard/oracle.h"
#include "maxcard/protocol.h"

namespace maxcard {

// d+1 Alice messages; copy i was run on V minus the elements of copies < i.
struct RobustSummary {
  int d = 0;
  int k = 0;
  std::string protocol;
  ElementSet ground;
  std::vector<Message> messages;
  std::vector<ElementSet> sets;  // M_i, the distinct elements of message i

  int64_t StoredElements() const;
};

// Throws AccessViolationError if a copy looks outside its input and
// DisagreementError if the M_i are not pairwise disjoint.
RobustSummary BuildSummary(const ValueOracle& oracle, const ElementSet& ground,
                           int k, int d, const ProtocolSpec& spec);

struct RobustAnswer {
  ElementSet solution;
  double value = 0.0;
  int copy = 0;  // 0-based l with M_l ∩ D = ∅
};

// Runs Bob of the first copy l whose set avoids D, on (M_0 ∪ ... ∪ M_{l-1})
// minus D. Throws PreconditionError if |D| > d or D leaves the ground set.
RobustAnswer QuerySummary(const RobustSummary& summary,
                          const ValueOracle& oracle, const ProtocolSpec& spec,
                          const ElementSet& deleted);

enum class AdversaryKind { kRandom, kGreedyDamage };

inline constexpr int kGreedyAdversaryGuard = 20;

AdversaryKind ParseAdversary(const std::string& name);

// kRandom: a uniform d-subset of the ground set (all of it if smaller).
// kGreedyDamage: d rounds, each deleting the element that minimizes the
// answer's value (smallest index on ties); needs |ground| <= 20.
ElementSet Adversary(AdversaryKind kind, const RobustSummary& summary,
                     const ValueOracle& oracle, const ProtocolSpec& spec,
                     uint64_t seed);

}  // namespace maxcard

#endif  // MAXCARD_ROBUST_H_
