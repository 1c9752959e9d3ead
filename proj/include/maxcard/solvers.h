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

#ifndef MAXCARD_SOLVERS_H_
#define MAXCARD_SOLVERS_H_

#include <span>
#include <string>
#include <vector>

#include "maxcard/element_set.h"
#include "maxcard/oracle.h"

namespace maxcard {

inline constexpr int kDefaultEnumerationGuard = 30;
inline constexpr int kSubmodularityCheckGuard = 12;

struct Solution {
  ElementSet elements;
  double value = 0.0;
};

// Exact maximization over all subsets of `candidates` with at most k
// elements. Subsets are scanned in lexicographic order and a later subset
// replaces the incumbent only if it is better by more than kValueTolerance,
// so exact ties go to the lexicographically smallest set.
// Throws GuardExceededError if there are more than `guard` candidates and
// DomainError if a candidate is outside the oracle's domain.
Solution BruteForceOpt(const ValueOracle& oracle,
                       std::span<const Element> candidates, int k,
                       int guard = kDefaultEnumerationGuard);

// Runs `rounds` greedy steps starting from `base`, each adding a candidate of
// maximum marginal gain (ties, including all-zero gains, go to the smallest
// index). Returns the added elements in selection order.
// Requires rounds <= |candidates \ base|.
std::vector<Element> Greedy(const ValueOracle& oracle,
                            std::span<const Element> candidates, int rounds,
                            std::span<const Element> base = {});

struct SubmodularityReport {
  bool passed = true;
  // "non-negativity", "monotonicity" or "submodularity" for failures.
  std::string violation;
  // Witness: the diminishing-returns condition f(v|x) >= f(v|y) failed, or
  // f(y) < f(x) for monotonicity (x ⊂ y), or f(x) < 0.
  ElementSet x;
  ElementSet y;
  Element v = -1;
  double lhs = 0.0;
  double rhs = 0.0;
  int64_t checks = 0;
};

// Exhaustively checks non-negativity, monotonicity and diminishing returns
// over all X ⊆ Y ⊆ domain and v ∉ Y. Stops at the first counterexample.
SubmodularityReport CheckMonotoneSubmodular(
    const ValueOracle& oracle, std::span<const Element> domain,
    double tolerance = kValueTolerance);

}  // namespace maxcard

#endif  // MAXCARD_SOLVERS_H_
