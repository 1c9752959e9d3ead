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

#include "maxcard/audit.h"

#include <algorithm>

#include "maxcard/errors.h"
#include "maxcard/nlp.h"
#include "maxcard/protocols.h"

namespace maxcard {

EfficientAudit AuditEfficientProtocol(const ValueOracle& oracle,
                                      const Partition& partition, int k,
                                      const ElementSet& optimum) {
  if (partition.num_blocks() != 2) {
    throw PreconditionError("audit needs a two-block partition");
  }
  const ElementSet& v_a = partition.private_set(0);
  const ElementSet& v_b = partition.private_set(1);
  const std::vector<Element> alice = Greedy(
      oracle, v_a, std::min(2 * k, static_cast<int>(v_a.size())));

  EfficientAudit audit;
  const ElementSet o_a = SetIntersection(optimum, v_a);
  audit.k_a = static_cast<int>(o_a.size());
  audit.f_o = oracle.Evaluate(optimum);
  audit.f_oa = oracle.Evaluate(o_a);
  audit.g_a = Normalize(
      ElementSet(alice.begin(), alice.begin() + audit.k_a));
  audit.f_ga = oracle.Evaluate(audit.g_a);
  if (audit.f_oa > 0.0) {
    const double joint = oracle.Evaluate(SetUnion(audit.g_a, o_a));
    audit.delta_a =
        std::clamp((joint - audit.f_ga) / audit.f_oa, 0.0, 1.0);
  }
  const EfficientBobTrace trace = EfficientBob(oracle, alice, v_b, k);
  audit.f_x = trace.x_value[audit.k_a];
  audit.f_y = trace.y_value[audit.k_a];

  audit.prefix_bound = GreedyPrefixBound(audit.delta_a, audit.f_oa);
  audit.bound_x = BoundX(audit.delta_a, audit.f_oa, audit.f_o, audit.f_ga);
  audit.bound_y = BoundY(audit.delta_a, audit.f_oa, audit.f_o);
  const double tol = kValueTolerance * std::max(1.0, audit.f_o);
  audit.prefix_ok = audit.f_ga >= audit.prefix_bound - tol;
  audit.x_ok = audit.f_x >= audit.bound_x - tol;
  audit.y_ok = audit.f_y >= audit.bound_y - tol;
  return audit;
}

}  // namespace maxcard
