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

#ifndef MAXCARD_MULTILINEAR_H_
#define MAXCARD_MULTILINEAR_H_

#include <span>
#include <vector>

#include "maxcard/element_set.h"
#include "maxcard/oracle.h"

namespace maxcard {

// The gadget g_i on W' = {v_0, ..., v_{n-1}, w}; v_j has index j and w has
// index n. With S' = S \ {w}:
//   g_i({w}) = 1/3,  g_i({w, v_i}) = 1,  otherwise min(2|S'|/3, 1).
// The hidden index i is 0-based.
class IndexGadgetFn : public SetFunction {
 public:
  IndexGadgetFn(int n, int index);

  int ground_size() const override { return n_ + 1; }
  double Evaluate(std::span<const Element> s) const override;

  // g_i as a function of (w in S, v_i in S, |S \ {w}|).
  static double Value(bool has_w, bool has_vi, int others_and_vi);

  int n() const { return n_; }
  int index() const { return index_; }
  Element w() const { return n_; }

 private:
  int n_;
  int index_;
};

// f_i(S) = G_i(y^S), where G_i is the multilinear extension of g_i and y^S
// puts mass |S ∩ {u_j^1..u_j^{k-1}}| / (k-1) on v_j and 1[w in S] on w.
// Ground set: u_j^m (j in [0,n), m in [0,k-1)) has index j(k-1)+m; w is
// n(k-1). Evaluated exactly with a Poisson-binomial recursion.
class MultilinearHardnessFn : public SetFunction {
 public:
  // Requires n >= 1, k >= 2, 0 <= index < n.
  MultilinearHardnessFn(int n, int k, int index);

  int ground_size() const override { return n_ * (k_ - 1) + 1; }
  double Evaluate(std::span<const Element> s) const override;

  int n() const { return n_; }
  int k() const { return k_; }
  int index() const { return index_; }
  Element u(int j, int m) const { return j * (k_ - 1) + m; }
  Element w() const { return n_ * (k_ - 1); }
  // All u elements (Alice's block).
  ElementSet UBlock() const { return Range(n_ * (k_ - 1)); }
  // {u_j^0, ..., u_j^{k-2}}.
  ElementSet UGroup(int j) const;

  // Number of elements of S in each u group, and whether w is in S.
  std::vector<int> GroupCounts(std::span<const Element> s) const;

 private:
  int n_;
  int k_;
  int index_;
};

}  // namespace maxcard

#endif  // MAXCARD_MULTILINEAR_H_
