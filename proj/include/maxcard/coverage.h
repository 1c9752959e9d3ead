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

#ifndef MAXCARD_COVERAGE_H_
#define MAXCARD_COVERAGE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "maxcard/element_set.h"
#include "maxcard/oracle.h"

namespace maxcard {

inline constexpr int kFractionalConversionGuard = 12;
inline constexpr double kConversionPruneWeight = 1e-15;

// f(S) = total weight of the universe points covered by the sets of S.
class WeightedCoverageFn : public SetFunction {
 public:
  // element_sets[v] lists the points covered by element v.
  WeightedCoverageFn(std::vector<double> weights,
                     std::vector<std::vector<int>> element_sets);

  int ground_size() const override {
    return static_cast<int>(element_sets_.size());
  }
  double Evaluate(std::span<const Element> s) const override;

  int universe_size() const { return static_cast<int>(weights_.size()); }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<std::vector<int>>& element_sets() const {
    return element_sets_;
  }

 private:
  std::vector<double> weights_;
  std::vector<std::vector<int>> element_sets_;
  // Per-element point masks, used when the universe has at most 64 points.
  std::vector<uint64_t> masks_;
};

// f(S) = sum_u a_u (1 - prod_{v in S} (1 - p_v(u))): each element of S
// covers point u independently with probability p_v(u).
class FractionalCoverageFn : public SetFunction {
 public:
  // cover_prob[v][u] = p_v(u).
  FractionalCoverageFn(std::vector<double> weights,
                       std::vector<std::vector<double>> cover_prob);

  int ground_size() const override {
    return static_cast<int>(cover_prob_.size());
  }
  double Evaluate(std::span<const Element> s) const override;

  int universe_size() const { return static_cast<int>(weights_.size()); }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<std::vector<double>>& cover_prob() const {
    return cover_prob_;
  }

 private:
  std::vector<double> weights_;
  std::vector<std::vector<double>> cover_prob_;
};

// Rewrites a fractional coverage function over ground set V as an ordinary
// weighted coverage function whose universe is the power set of V: point X
// gets weight sum_u a_u prod_{v in X} p_v(u) prod_{v not in X} (1 - p_v(u))
// and element v covers every X containing v. Points whose weight is below
// kConversionPruneWeight are dropped. Requires |V| <= 12.
WeightedCoverageFn FractionalToWeighted(const FractionalCoverageFn& f);

}  // namespace maxcard

#endif  // MAXCARD_COVERAGE_H_
