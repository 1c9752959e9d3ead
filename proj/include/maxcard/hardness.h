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

#ifndef MAXCARD_HARDNESS_H_
#define MAXCARD_HARDNESS_H_

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "maxcard/coverage.h"
#include "maxcard/element_set.h"
#include "maxcard/oracle.h"
#include "maxcard/partition.h"

namespace maxcard {

inline constexpr int kMaxWeightsP = 1000000;

// H_p = 1 + 1/2 + ... + 1/p, by direct summation.
double HarmonicNumber(int p);

// Weights of the p-block hard family. Vectors are 0-based: delta[j-1] is
// delta_j, a[j-1] is a_j and suffix[j-1] is A_{>=j} = a_j + ... + a_p.
struct HardnessWeights {
  int p = 0;
  std::vector<double> delta;
  std::vector<double> a;
  std::vector<double> suffix;

  // a_j / A_{>=j} for 1-based j.
  double Ratio(int j) const { return a[j - 1] / suffix[j - 1]; }
  double Total() const { return suffix[0]; }
};

// delta_p = 1, delta_i = 1 + (1 + sqrt(1 + 4/delta_{i+1}))/2 * delta_{i+1},
// a_j = prod_{i<j} 1/(1 - 1/delta_i). Throws DisagreementError if the
// quadratic (1 - 1/delta_i)(delta_i - 1) = delta_{i+1} is off by more than
// 1e-9 (relative).
HardnessWeights MakeWeights(int p);

struct WeightIdentityReport {
  double max_quadratic_residual = 0.0;
  // |a_j prod_{i<j}(1 - a_i/A_{>=i}) - 1|.
  double max_product_residual = 0.0;
  // |sum_{i>=j}(2 - a_i/A_{>=i}) - A_{>=j}/a_j|.
  double max_sum_residual = 0.0;
  // 2j - H_j <= A_{>=p-j+1}/a_{p-j+1} <= 2j - 1 for every j.
  bool ratio_bounds_hold = true;
  int first_ratio_bound_failure = 0;
  bool passed = true;
};

// Product residual <= 1e-9, sum residual <= 1e-9 * p, ratio bounds with a
// relative slack of 1e-12.
WeightIdentityReport CheckWeightIdentities(const HardnessWeights& weights);

// The hard function of the family for one choice of hidden optimum: p blocks
// of n elements, element m of block j (both 0-based) has index j*n + m, and
// hidden[j] is the optimal element o_j of block j.
//   f(S) = sum_j a_j (1 - 1[o_j not in S] prod_{i<=j} q_i^{c_i}),
// with q_i = 1 - a_i/A_{>=i} and c_i = |S ∩ (W_i \ {o_i})|.
class HardnessFn : public SetFunction {
 public:
  HardnessFn(std::shared_ptr<const HardnessWeights> weights, int n,
             std::vector<Element> hidden);
  // Convenience: builds the weights too.
  HardnessFn(int p, int n, std::vector<Element> hidden);

  int ground_size() const override { return p() * n_; }
  double Evaluate(std::span<const Element> s) const override;

  int p() const { return weights_->p; }
  int n() const { return n_; }
  const HardnessWeights& weights() const { return *weights_; }
  const std::shared_ptr<const HardnessWeights>& shared_weights() const {
    return weights_;
  }
  const std::vector<Element>& hidden() const { return hidden_; }
  ElementSet HiddenSet() const { return Normalize(hidden_); }
  Element element(int block, int m) const { return block * n_ + m; }
  ElementSet Block(int block) const;
  // Blocks as a partition; every private set is its whole block.
  Partition FullPartition() const;

  // The same function written as a fractional coverage function: universe
  // u_1..u_p with weights a_j, o_j covers u_j with certainty, and any other
  // element of block j covers each of u_j..u_p with probability a_j/A_{>=j}.
  FractionalCoverageFn ToFractional() const;

 private:
  std::shared_ptr<const HardnessWeights> weights_;
  int n_;
  std::vector<Element> hidden_;
  std::vector<char> is_hidden_;
};

struct ValueGapReport {
  double max_disjoint_value = 0.0;
  ElementSet argmax;
  double bound = 0.0;  // p + H_p^2
  double optimum_value = 0.0;
  double optimum_lower = 0.0;  // 2p - H_p
  double optimum_upper = 0.0;  // 2p
  bool passed = true;
};

// Maximizes f over sets of at most k elements avoiding every o_j and checks
// the result against p + H_p^2; also checks f(O) in [2p - H_p, 2p].
// Requires p <= 5 and n <= 4.
ValueGapReport ValueGapCheck(const HardnessFn& f, int k);

struct IndistinguishabilityReport {
  int p = 0;
  int n = 0;
  int ell = 0;
  int64_t groups = 0;
  int64_t comparisons = 0;
  double max_deviation = 0.0;
  bool passed = true;
};

// For every pair of hidden optima sharing o_1..o_{ell-1}, compares the two
// functions on every subset of W_1 ∪ ... ∪ W_ell (tolerance 1e-12). ell is
// 1-based. Requires p*n <= 12.
IndistinguishabilityReport IndistinguishabilityCheck(int p, int n, int ell);

// dF/ds_ell at the all-ones vector for the concave proxy
//   F(s) = a_p + sum_{j<p} a_j (1 - prod_{i<=j} q_i^{s_i}),
// i.e. -ln(1 - a_ell/A_{>=ell}) (A_{>=ell}/a_ell - (p+1-ell)); 0 for ell=p.
double ProxyDerivativeAtOnes(const HardnessWeights& weights, int ell);

struct DerivativeBoundsReport {
  int p = 0;
  std::vector<double> derivative;  // 0-based by ell-1
  double min_upper_slack = 0.0;     // min over ell of 1/2 - d
  double min_lower_slack = 0.0;     // min over ell of d - (1/2 - H_m/m)
  int first_failure = 0;            // 1-based ell, 0 if none
  bool passed = true;
};

// Checks 1/2 - H_m/m <= dF/ds_ell(1) <= 1/2 with m = p+1-ell, for every ell.
// Requires p <= 10^4.
DerivativeBoundsReport DerivativeBoundsCheck(int p);

}  // namespace maxcard

#endif  // MAXCARD_HARDNESS_H_
