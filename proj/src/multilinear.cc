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

#include "maxcard/multilinear.h"

#include <algorithm>
#include <string>

#include "maxcard/errors.h"

namespace maxcard {
namespace {

// Distribution of the number of successes among independent Bernoulli trials
// with success probabilities counts[j] / denom.
std::vector<double> PoissonBinomial(std::span<const int> counts, int denom) {
  std::vector<double> dist{1.0};
  for (int c : counts) {
    if (c == 0) continue;
    const double q = static_cast<double>(c) / denom;
    dist.push_back(0.0);
    for (size_t m = dist.size() - 1; m > 0; --m) {
      dist[m] = dist[m] * (1.0 - q) + dist[m - 1] * q;
    }
    dist[0] *= 1.0 - q;
  }
  return dist;
}

}  // namespace

IndexGadgetFn::IndexGadgetFn(int n, int index) : n_(n), index_(index) {
  if (n < 1 || index < 0 || index >= n) {
    throw PreconditionError("gadget needs n >= 1 and 0 <= index < n");
  }
}

double IndexGadgetFn::Value(bool has_w, bool has_vi, int others_and_vi) {
  if (has_w && others_and_vi == 0) return 1.0 / 3.0;
  if (has_w && has_vi && others_and_vi == 1) return 1.0;
  return std::min(2.0 * others_and_vi / 3.0, 1.0);
}

double IndexGadgetFn::Evaluate(std::span<const Element> s) const {
  const bool has_w = Contains(s, w());
  const bool has_vi = Contains(s, index_);
  const int rest = static_cast<int>(s.size()) - (has_w ? 1 : 0);
  return Value(has_w, has_vi, rest);
}

MultilinearHardnessFn::MultilinearHardnessFn(int n, int k, int index)
    : n_(n), k_(k), index_(index) {
  if (n < 1 || k < 2 || index < 0 || index >= n) {
    throw PreconditionError(
        "multilinear hardness function needs n >= 1, k >= 2, 0 <= index < n");
  }
}

ElementSet MultilinearHardnessFn::UGroup(int j) const {
  ElementSet out;
  for (int m = 0; m < k_ - 1; ++m) out.push_back(u(j, m));
  return out;
}

std::vector<int> MultilinearHardnessFn::GroupCounts(
    std::span<const Element> s) const {
  std::vector<int> counts(n_, 0);
  for (Element e : s) {
    if (e != w()) ++counts[e / (k_ - 1)];
  }
  return counts;
}

double MultilinearHardnessFn::Evaluate(std::span<const Element> s) const {
  const int denom = k_ - 1;
  std::vector<int> counts = GroupCounts(s);
  const bool has_w = Contains(s, w());
  if (!has_w) {
    // Without w, g_i only depends on how many v's are realized, so the
    // hidden index plays no role.
    const std::vector<double> dist = PoissonBinomial(counts, denom);
    double total = 0.0;
    for (size_t m = 0; m < dist.size(); ++m) {
      total += dist[m] * IndexGadgetFn::Value(false, false, m);
    }
    return total;
  }
  const double q_hidden = static_cast<double>(counts[index_]) / denom;
  counts[index_] = 0;
  const std::vector<double> dist = PoissonBinomial(counts, denom);
  double total = 0.0;
  for (size_t m = 0; m < dist.size(); ++m) {
    const int others = static_cast<int>(m);
    total += dist[m] * (1.0 - q_hidden) *
             IndexGadgetFn::Value(true, false, others);
    total += dist[m] * q_hidden * IndexGadgetFn::Value(true, true, others + 1);
  }
  return total;
}

}  // namespace maxcard
