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

#ifndef MAXCARD_AUDIT_H_
#define MAXCARD_AUDIT_H_

#include "maxcard/element_set.h"
#include "maxcard/oracle.h"
#include "maxcard/partition.h"
#include "maxcard/solvers.h"

namespace maxcard {

// The quantities behind the efficient protocol's ratio for one run, given an
// optimum O. O is completed to k elements by zero-value dummies held by Bob,
// so k_A = |O ∩ V_A| and Bob's share is k - k_A.
struct EfficientAudit {
  int k_a = 0;
  double f_o = 0.0;
  double f_oa = 0.0;       // f(O ∩ V_A)
  ElementSet g_a;          // first k_A greedy picks of Alice
  double f_ga = 0.0;
  double delta_a = 0.0;    // f(O ∩ V_A | G_A) / f(O ∩ V_A), 0 if f(O∩V_A)=0
  double f_x = 0.0;        // f(X_{k_A})
  double f_y = 0.0;        // f(Y_{k_A})
  double prefix_bound = 0.0;
  double bound_x = 0.0;
  double bound_y = 0.0;
  bool prefix_ok = false;
  bool x_ok = false;
  bool y_ok = false;

  bool passed() const { return prefix_ok && x_ok && y_ok; }
};

// Replays the efficient protocol on a two-block partition and checks
//   f(G_A) >= (1 + Δ ln Δ) f(O∩V_A),
//   f(X_{k_A}) >= (1-1/e) f(O) + f(G_A)/e - (1-1/e) Δ f(O∩V_A),
//   f(Y_{k_A}) >= (1-1/e) f(O)/2 + (1/e + Δ ln Δ + (1-1/e) Δ) f(O∩V_A)/2,
// each up to kValueTolerance * max(1, f(O)).
EfficientAudit AuditEfficientProtocol(const ValueOracle& oracle,
                                      const Partition& partition, int k,
                                      const ElementSet& optimum);

}  // namespace maxcard

#endif  // MAXCARD_AUDIT_H_
