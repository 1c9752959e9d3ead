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

#include "maxcard/coverage.h"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

#include "maxcard/errors.h"

namespace maxcard {

WeightedCoverageFn::WeightedCoverageFn(
    std::vector<double> weights, std::vector<std::vector<int>> element_sets)
    : weights_(std::move(weights)), element_sets_(std::move(element_sets)) {
  if (element_sets_.empty()) {
    throw PreconditionError("coverage function needs at least one element");
  }
  for (double w : weights_) {
    if (!(w >= 0.0)) throw PreconditionError("negative coverage weight");
  }
  const int universe = universe_size();
  for (auto& points : element_sets_) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    for (int u : points) {
      if (u < 0 || u >= universe) {
        throw PreconditionError("coverage point out of range: " +
                                std::to_string(u));
      }
    }
  }
  if (universe <= 64) {
    masks_.reserve(element_sets_.size());
    for (const auto& points : element_sets_) {
      uint64_t mask = 0;
      for (int u : points) mask |= uint64_t{1} << u;
      masks_.push_back(mask);
    }
  }
}

double WeightedCoverageFn::Evaluate(std::span<const Element> s) const {
  double total = 0.0;
  if (!masks_.empty()) {
    uint64_t covered = 0;
    for (Element v : s) covered |= masks_[v];
    while (covered != 0) {
      const int u = std::countr_zero(covered);
      total += weights_[u];
      covered &= covered - 1;
    }
    return total;
  }
  std::vector<char> covered(weights_.size(), 0);
  for (Element v : s) {
    for (int u : element_sets_[v]) covered[u] = 1;
  }
  for (size_t u = 0; u < weights_.size(); ++u) {
    if (covered[u]) total += weights_[u];
  }
  return total;
}

FractionalCoverageFn::FractionalCoverageFn(
    std::vector<double> weights, std::vector<std::vector<double>> cover_prob)
    : weights_(std::move(weights)), cover_prob_(std::move(cover_prob)) {
  if (cover_prob_.empty()) {
    throw PreconditionError("coverage function needs at least one element");
  }
  for (double w : weights_) {
    if (!(w >= 0.0)) throw PreconditionError("negative coverage weight");
  }
  for (const auto& row : cover_prob_) {
    if (row.size() != weights_.size()) {
      throw PreconditionError("cover_prob row length != universe size");
    }
    for (double q : row) {
      if (!(q >= 0.0 && q <= 1.0)) {
        throw PreconditionError("cover probability outside [0, 1]");
      }
    }
  }
}

double FractionalCoverageFn::Evaluate(std::span<const Element> s) const {
  double total = 0.0;
  for (size_t u = 0; u < weights_.size(); ++u) {
    double miss = 1.0;
    for (Element v : s) miss *= 1.0 - cover_prob_[v][u];
    total += weights_[u] * (1.0 - miss);
  }
  return total;
}

WeightedCoverageFn FractionalToWeighted(const FractionalCoverageFn& f) {
  const int n = f.ground_size();
  if (n > kFractionalConversionGuard) {
    throw GuardExceededError("conversion of a fractional coverage function "
                             "with " + std::to_string(n) +
                             " elements exceeds the guard of " +
                             std::to_string(kFractionalConversionGuard));
  }
  std::vector<double> weights;
  std::vector<std::vector<int>> element_sets(n);
  const auto& prob = f.cover_prob();
  // The empty point is covered by nothing, so it is skipped.
  for (uint32_t x = 1; x < (1u << n); ++x) {
    double weight = 0.0;
    for (int u = 0; u < f.universe_size(); ++u) {
      double mass = f.weights()[u];
      for (int v = 0; v < n; ++v) {
        mass *= (x >> v & 1u) ? prob[v][u] : 1.0 - prob[v][u];
      }
      weight += mass;
    }
    if (weight < kConversionPruneWeight) continue;
    const int point = static_cast<int>(weights.size());
    weights.push_back(weight);
    for (int v = 0; v < n; ++v) {
      if (x >> v & 1u) element_sets[v].push_back(point);
    }
  }
  return WeightedCoverageFn(std::move(weights), std::move(element_sets));
}

}  // namespace maxcard
