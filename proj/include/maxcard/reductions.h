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

#ifndef MAXCARD_REDUCTIONS_H_
#define MAXCARD_REDUCTIONS_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "maxcard/protocol.h"

namespace maxcard {

// Alice holds x in {0,1}^n, Bob holds t in [0, n).
struct IndexInstance {
  std::vector<int> x;
  int t = 0;

  int n() const { return static_cast<int>(x.size()); }
  void Validate() const;
};

// x[i] is the string of player i (0 <= i < p-1) and t[i] the index held by
// player i+1, so the promise reads x[i][t[i]] == which_case.
struct ChainInstance {
  int p = 0;
  int n = 0;
  std::vector<std::vector<int>> x;
  std::vector<int> t;
  int which_case = 0;

  void Validate() const;
  IndexInstance AsIndex() const;  // p == 2 only
};

// Each pair (x[i], t[i]) uniform subject to x[i][t[i]] == which_case.
ChainInstance SampleChain(int p, int n, int which_case, uint64_t seed);

// 2k / (3(k-1)); requires k >= 2.
double IndexThreshold(int k);
// p + H_p^2.
double ChainThreshold(int p);

struct ReductionOutcome {
  int decision = 0;
  double value = 0.0;
  double threshold = 0.0;
  int ground_size = 0;
  // Bits spent on forwarded indices (chain only).
  int64_t index_bits = 0;
  // Largest message in bits, forwarded indices included.
  int64_t max_message_bits = 0;
  Transcript transcript;
};

// Builds f_t on N = 1 + n(k-1) elements; Alice holds the u groups j with
// x_j = 1 and queries f_0 (identical to f_t on her block), Bob holds {w} and
// queries f_t. Decides 1 iff the inner protocol's value exceeds the
// threshold by more than kValueTolerance.
ReductionOutcome ReduceIndexToMaxCard(const IndexInstance& inst, int k,
                                      const ProtocolSpec& inner);

// Builds the hard family with p blocks of n elements, hidden o_i = v^i_{t[i]}
// for i < p-1 and o_{p-1} the smallest element of the last block. Player i
// holds {v^i_j : x[i][j] = 1} (the last player holds its whole block) and
// queries the function whose unknown hidden elements are set to the smallest
// element of their block. Runs with k = p.
ReductionOutcome ReduceChainToMaxCard(const ChainInstance& inst,
                                      const ProtocolSpec& inner);

// ceil(2 / eps); requires eps in (0, 1).
int AmplifiedCopies(double eps);

using DecisionProcedure = std::function<int(uint64_t seed)>;

// Runs `copies` executions concurrently with derived seeds; 1 iff any copy
// decides 1.
int Amplify(const DecisionProcedure& decide, int copies, uint64_t seed,
            int workers);

struct SuccessEstimate {
  int64_t trials = 0;
  int64_t successes = 0;
  double rate = 0.0;
  double lower = 0.0;
  double upper = 0.0;
};

// Wilson score interval.
SuccessEstimate WilsonEstimate(int64_t successes, int64_t trials,
                               double z = 1.96);

// trial(seed) returns the decision of one independent trial; success means
// deciding `expected`.
SuccessEstimate EstimateSuccess(const DecisionProcedure& trial, int expected,
                                int64_t trials, uint64_t seed, int workers);

}  // namespace maxcard

#endif  // MAXCARD_REDUCTIONS_H_
