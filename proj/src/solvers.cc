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

#include "maxcard/solvers.h"

#include <cstdint>

#include "maxcard/errors.h"

namespace maxcard {
namespace {

void CheckDomain(const ValueOracle& oracle, std::span<const Element> s) {
  for (Element e : s) {
    if (!oracle.InDomain(e)) {
      throw DomainError("candidate " + std::to_string(e) +
                        " is outside the oracle domain");
    }
  }
}

ElementSet FromMask(const ElementSet& domain, uint32_t mask) {
  ElementSet out;
  for (size_t i = 0; i < domain.size(); ++i) {
    if (mask & (1u << i)) out.push_back(domain[i]);
  }
  return out;
}

}  // namespace

Solution BruteForceOpt(const ValueOracle& oracle,
                       std::span<const Element> candidates, int k, int guard) {
  const ElementSet cand = Normalize(ElementSet(candidates.begin(),
                                               candidates.end()));
  if (static_cast<int>(cand.size()) > guard) {
    throw GuardExceededError("brute force over " +
                             std::to_string(cand.size()) +
                             " candidates exceeds the guard of " +
                             std::to_string(guard));
  }
  if (k < 0) throw PreconditionError("negative cardinality bound");
  CheckDomain(oracle, cand);

  Solution best{{}, oracle.Evaluate(std::span<const Element>())};
  const int n = static_cast<int>(cand.size());
  const int limit = std::min(k, n);
  if (limit == 0) return best;

  // Preorder depth-first walk: visits sorted index sets in lexicographic
  // order.
  ElementSet current;
  std::vector<int> positions;
  int next = 0;
  while (true) {
    if (static_cast<int>(current.size()) < limit && next < n) {
      positions.push_back(next);
      current.push_back(cand[next]);
      const double value = oracle.Evaluate(current);
      if (value > best.value + kValueTolerance) best = {current, value};
      ++next;
      continue;
    }
    if (positions.empty()) break;
    next = positions.back() + 1;
    positions.pop_back();
    current.pop_back();
  }
  return best;
}

std::vector<Element> Greedy(const ValueOracle& oracle,
                            std::span<const Element> candidates, int rounds,
                            std::span<const Element> base) {
  const ElementSet cand = Normalize(ElementSet(candidates.begin(),
                                               candidates.end()));
  CheckDomain(oracle, cand);
  ElementSet current = Normalize(ElementSet(base.begin(), base.end()));
  ElementSet pool = SetDifference(cand, current);
  if (rounds < 0 || rounds > static_cast<int>(pool.size())) {
    throw PreconditionError("greedy asked for " + std::to_string(rounds) +
                            " rounds with " + std::to_string(pool.size()) +
                            " available candidates");
  }
  std::vector<Element> picked;
  picked.reserve(rounds);
  for (int round = 0; round < rounds; ++round) {
    const double base_value = oracle.Evaluate(current);
    int best_pos = -1;
    double best_gain = 0.0;
    for (size_t i = 0; i < pool.size(); ++i) {
      const Element v = pool[i];
      ElementSet with = SetUnion(current, std::span<const Element>(&v, 1));
      const double gain = oracle.Evaluate(with) - base_value;
      if (best_pos < 0 || gain > best_gain + kValueTolerance) {
        best_pos = static_cast<int>(i);
        best_gain = gain;
      }
    }
    const Element chosen = pool[best_pos];
    picked.push_back(chosen);
    pool.erase(pool.begin() + best_pos);
    current = SetUnion(current, std::span<const Element>(&chosen, 1));
  }
  return picked;
}

SubmodularityReport CheckMonotoneSubmodular(const ValueOracle& oracle,
                                            std::span<const Element> domain,
                                            double tolerance) {
  const ElementSet dom = Normalize(ElementSet(domain.begin(), domain.end()));
  const int m = static_cast<int>(dom.size());
  if (m > kSubmodularityCheckGuard) {
    throw GuardExceededError("submodularity check over " + std::to_string(m) +
                             " elements exceeds the guard of " +
                             std::to_string(kSubmodularityCheckGuard));
  }
  CheckDomain(oracle, dom);
  const uint32_t full = (1u << m) - 1;
  std::vector<double> value(size_t{1} << m);
  for (uint32_t s = 0; s <= full; ++s) {
    value[s] = oracle.Evaluate(FromMask(dom, s));
  }

  SubmodularityReport report;
  for (uint32_t s = 0; s <= full; ++s) {
    ++report.checks;
    if (value[s] < -tolerance) {
      report.passed = false;
      report.violation = "non-negativity";
      report.x = FromMask(dom, s);
      report.lhs = value[s];
      return report;
    }
  }
  for (uint32_t s = 0; s <= full; ++s) {
    for (int v = 0; v < m; ++v) {
      const uint32_t bit = 1u << v;
      if (s & bit) continue;
      ++report.checks;
      if (value[s | bit] < value[s] - tolerance) {
        report.passed = false;
        report.violation = "monotonicity";
        report.x = FromMask(dom, s);
        report.y = FromMask(dom, s | bit);
        report.v = dom[v];
        report.lhs = value[s | bit];
        report.rhs = value[s];
        return report;
      }
    }
  }
  for (uint32_t y = 0; y <= full; ++y) {
    // All submasks x of y, including y itself and the empty set.
    for (uint32_t x = y;; x = (x - 1) & y) {
      for (int v = 0; v < m; ++v) {
        const uint32_t bit = 1u << v;
        if (y & bit) continue;
        ++report.checks;
        const double gain_x = value[x | bit] - value[x];
        const double gain_y = value[y | bit] - value[y];
        if (gain_x < gain_y - tolerance) {
          report.passed = false;
          report.violation = "submodularity";
          report.x = FromMask(dom, x);
          report.y = FromMask(dom, y);
          report.v = dom[v];
          report.lhs = gain_x;
          report.rhs = gain_y;
          return report;
        }
      }
      if (x == 0) break;
    }
  }
  return report;
}

}  // namespace maxcard
