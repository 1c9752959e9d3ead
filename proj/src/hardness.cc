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

#include "maxcard/hardness.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <utility>

#include "maxcard/errors.h"
#include "maxcard/solvers.h"

namespace maxcard {
namespace {

constexpr double kQuadraticTolerance = 1e-9;
constexpr double kProductTolerance = 1e-9;
constexpr double kSumTolerancePerBlock = 1e-9;
constexpr double kRatioBoundSlack = 1e-12;
constexpr double kIndistinguishabilityTolerance = 1e-12;
constexpr double kDerivativeSlack = 1e-12;

std::vector<double> HarmonicTable(int p) {
  std::vector<double> h(p + 1, 0.0);
  for (int i = 1; i <= p; ++i) h[i] = h[i - 1] + 1.0 / i;
  return h;
}

}  // namespace

double HarmonicNumber(int p) {
  double h = 0.0;
  for (int i = 1; i <= p; ++i) h += 1.0 / i;
  return h;
}

HardnessWeights MakeWeights(int p) {
  if (p < 1 || p > kMaxWeightsP) {
    throw PreconditionError("weights need 1 <= p <= " +
                            std::to_string(kMaxWeightsP));
  }
  HardnessWeights w;
  w.p = p;
  w.delta.assign(p, 1.0);
  for (int i = p - 2; i >= 0; --i) {
    const double next = w.delta[i + 1];
    w.delta[i] = 1.0 + (1.0 + std::sqrt(1.0 + 4.0 / next)) / 2.0 * next;
    const double residual =
        (1.0 - 1.0 / w.delta[i]) * (w.delta[i] - 1.0) - next;
    if (std::abs(residual) > kQuadraticTolerance * std::max(1.0, next)) {
      throw DisagreementError("delta recursion and its quadratic disagree at "
                              "i=" + std::to_string(i + 1));
    }
  }
  w.a.assign(p, 1.0);
  for (int j = 1; j < p; ++j) {
    w.a[j] = w.a[j - 1] / (1.0 - 1.0 / w.delta[j - 1]);
  }
  if (!std::isfinite(w.a[p - 1])) {
    throw PreconditionError("weights overflow");
  }
  w.suffix.assign(p, 0.0);
  double sum = 0.0;
  for (int j = p - 1; j >= 0; --j) {
    sum += w.a[j];
    w.suffix[j] = sum;
  }
  return w;
}

WeightIdentityReport CheckWeightIdentities(const HardnessWeights& weights) {
  const int p = weights.p;
  WeightIdentityReport report;
  for (int i = 0; i + 1 < p; ++i) {
    const double d = weights.delta[i];
    report.max_quadratic_residual =
        std::max(report.max_quadratic_residual,
                 std::abs((1.0 - 1.0 / d) * (d - 1.0) - weights.delta[i + 1]));
  }
  double product = 1.0;
  for (int j = 1; j <= p; ++j) {
    report.max_product_residual =
        std::max(report.max_product_residual,
                 std::abs(weights.a[j - 1] * product - 1.0));
    product *= 1.0 - weights.Ratio(j);
  }
  double tail = 0.0;
  for (int j = p; j >= 1; --j) {
    tail += 2.0 - weights.Ratio(j);
    report.max_sum_residual =
        std::max(report.max_sum_residual,
                 std::abs(tail - weights.suffix[j - 1] / weights.a[j - 1]));
  }
  double h = 0.0;
  for (int j = 1; j <= p; ++j) {
    h += 1.0 / j;
    const double value = weights.suffix[p - j] / weights.a[p - j];
    const double slack = kRatioBoundSlack * value;
    if (value < 2.0 * j - h - slack || value > 2.0 * j - 1.0 + slack) {
      if (report.ratio_bounds_hold) report.first_ratio_bound_failure = j;
      report.ratio_bounds_hold = false;
    }
  }
  report.passed = report.max_quadratic_residual <=
                      kQuadraticTolerance * std::max(1.0, weights.delta[0]) &&
                  report.max_product_residual <= kProductTolerance &&
                  report.max_sum_residual <= kSumTolerancePerBlock * p &&
                  report.ratio_bounds_hold;
  return report;
}

HardnessFn::HardnessFn(std::shared_ptr<const HardnessWeights> weights, int n,
                       std::vector<Element> hidden)
    : weights_(std::move(weights)), n_(n), hidden_(std::move(hidden)) {
  if (weights_ == nullptr || n_ < 1) {
    throw PreconditionError("hard function needs weights and n >= 1");
  }
  if (static_cast<int>(hidden_.size()) != p()) {
    throw PreconditionError("need one hidden optimum per block");
  }
  is_hidden_.assign(ground_size(), 0);
  for (int j = 0; j < p(); ++j) {
    if (hidden_[j] < j * n_ || hidden_[j] >= (j + 1) * n_) {
      throw PreconditionError("hidden element of block " + std::to_string(j) +
                              " lies outside the block");
    }
    is_hidden_[hidden_[j]] = 1;
  }
}

HardnessFn::HardnessFn(int p, int n, std::vector<Element> hidden)
    : HardnessFn(std::make_shared<const HardnessWeights>(MakeWeights(p)), n,
                 std::move(hidden)) {}

double HardnessFn::Evaluate(std::span<const Element> s) const {
  const int blocks = p();
  std::vector<int> count(blocks, 0);
  std::vector<char> has_hidden(blocks, 0);
  for (Element e : s) {
    const int j = e / n_;
    if (is_hidden_[e]) {
      has_hidden[j] = 1;
    } else {
      ++count[j];
    }
  }
  const HardnessWeights& w = *weights_;
  double survive = 1.0;
  double total = 0.0;
  for (int j = 0; j < blocks; ++j) {
    const double q = 1.0 - w.a[j] / w.suffix[j];
    survive *= std::pow(q, count[j]);
    total += has_hidden[j] ? w.a[j] : w.a[j] * (1.0 - survive);
  }
  return total;
}

ElementSet HardnessFn::Block(int block) const {
  ElementSet out;
  for (int m = 0; m < n_; ++m) out.push_back(element(block, m));
  return out;
}

Partition HardnessFn::FullPartition() const {
  std::vector<ElementSet> blocks;
  for (int j = 0; j < p(); ++j) blocks.push_back(Block(j));
  std::vector<ElementSet> private_sets = blocks;
  return Partition(ground_size(), std::move(blocks), std::move(private_sets));
}

FractionalCoverageFn HardnessFn::ToFractional() const {
  const HardnessWeights& w = *weights_;
  const int blocks = p();
  std::vector<std::vector<double>> prob(ground_size(),
                                        std::vector<double>(blocks, 0.0));
  for (int j = 0; j < blocks; ++j) {
    for (int m = 0; m < n_; ++m) {
      const Element v = element(j, m);
      if (v == hidden_[j]) {
        prob[v][j] = 1.0;
      } else {
        for (int u = j; u < blocks; ++u) prob[v][u] = w.a[j] / w.suffix[j];
      }
    }
  }
  return FractionalCoverageFn(w.a, std::move(prob));
}

ValueGapReport ValueGapCheck(const HardnessFn& f, int k) {
  if (f.p() > 5 || f.n() > 4) {
    throw GuardExceededError("value gap check needs p <= 5 and n <= 4");
  }
  auto fn = std::make_shared<HardnessFn>(f);
  const ValueOracle oracle(fn);
  const ElementSet optimum = f.HiddenSet();
  const ElementSet candidates = SetDifference(Range(f.ground_size()), optimum);
  const Solution best = BruteForceOpt(oracle, candidates, k);

  const double h = HarmonicNumber(f.p());
  ValueGapReport report;
  report.max_disjoint_value = best.value;
  report.argmax = best.elements;
  report.bound = f.p() + h * h;
  report.optimum_value = oracle.Evaluate(optimum);
  report.optimum_lower = 2.0 * f.p() - h;
  report.optimum_upper = 2.0 * f.p();
  report.passed =
      report.max_disjoint_value <= report.bound + kValueTolerance &&
      report.optimum_value >= report.optimum_lower - kValueTolerance &&
      report.optimum_value <= report.optimum_upper + kValueTolerance;
  return report;
}

IndistinguishabilityReport IndistinguishabilityCheck(int p, int n, int ell) {
  if (p < 1 || n < 1 || ell < 1 || ell > p) {
    throw PreconditionError("indistinguishability check needs 1 <= ell <= p");
  }
  if (p * n > 12) {
    throw GuardExceededError("indistinguishability check needs p*n <= 12");
  }
  auto weights = std::make_shared<const HardnessWeights>(MakeWeights(p));

  // All hidden optima, grouped by the prefix o_1..o_{ell-1}.
  std::map<std::vector<Element>, std::vector<HardnessFn>> groups;
  std::vector<int> choice(p, 0);
  while (true) {
    std::vector<Element> hidden(p);
    for (int j = 0; j < p; ++j) hidden[j] = j * n + choice[j];
    std::vector<Element> prefix(hidden.begin(), hidden.begin() + (ell - 1));
    groups[prefix].emplace_back(weights, n, hidden);
    int j = p - 1;
    while (j >= 0 && ++choice[j] == n) choice[j--] = 0;
    if (j < 0) break;
  }

  IndistinguishabilityReport report{p, n, ell};
  report.groups = static_cast<int64_t>(groups.size());
  const int visible = ell * n;
  for (const auto& [prefix, members] : groups) {
    for (uint32_t mask = 0; mask < (1u << visible); ++mask) {
      ElementSet s;
      for (int e = 0; e < visible; ++e) {
        if (mask >> e & 1u) s.push_back(e);
      }
      const double reference = members.front().Evaluate(s);
      for (size_t i = 1; i < members.size(); ++i) {
        ++report.comparisons;
        report.max_deviation =
            std::max(report.max_deviation,
                     std::abs(members[i].Evaluate(s) - reference));
      }
    }
  }
  report.passed = report.max_deviation <= kIndistinguishabilityTolerance;
  return report;
}

double ProxyDerivativeAtOnes(const HardnessWeights& weights, int ell) {
  if (ell < 1 || ell > weights.p) {
    throw PreconditionError("derivative index out of range");
  }
  if (ell == weights.p) return 0.0;
  const double ratio = weights.Ratio(ell);
  const double inverse = weights.suffix[ell - 1] / weights.a[ell - 1];
  return -std::log1p(-ratio) * (inverse - (weights.p + 1 - ell));
}

DerivativeBoundsReport DerivativeBoundsCheck(int p) {
  if (p < 1 || p > 10000) {
    throw GuardExceededError("derivative bounds check needs 1 <= p <= 10^4");
  }
  const HardnessWeights weights = MakeWeights(p);
  const std::vector<double> h = HarmonicTable(p);
  DerivativeBoundsReport report;
  report.p = p;
  report.min_upper_slack = std::numeric_limits<double>::infinity();
  report.min_lower_slack = std::numeric_limits<double>::infinity();
  report.derivative.resize(p);
  for (int ell = 1; ell <= p; ++ell) {
    const int m = p + 1 - ell;
    const double d = ProxyDerivativeAtOnes(weights, ell);
    report.derivative[ell - 1] = d;
    const double upper_slack = 0.5 - d;
    const double lower_slack = d - (0.5 - h[m] / m);
    report.min_upper_slack = std::min(report.min_upper_slack, upper_slack);
    report.min_lower_slack = std::min(report.min_lower_slack, lower_slack);
    if ((upper_slack < -kDerivativeSlack || lower_slack < -kDerivativeSlack) &&
        report.first_failure == 0) {
      report.first_failure = ell;
    }
  }
  report.passed = report.first_failure == 0;
  return report;
}

}  // namespace maxcard
