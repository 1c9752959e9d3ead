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

#ifndef MAXCARD_PROTOCOLS_H_
#define MAXCARD_PROTOCOLS_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "maxcard/element_set.h"
#include "maxcard/oracle.h"
#include "maxcard/protocol.h"

namespace maxcard {

// Alice sends, for every i in `sizes`, a best subset S_i of V_A with at most
// i elements (brute force); Bob returns a best subset of size <= k of
// V_B ∪ ⋃ S_i (brute force). Identical S_i are sent once; the aux bytes map
// each size to its set.
ProtocolSpec RepeatedSolving(std::string name, int k, std::vector<int> sizes,
                             double guarantee, double message_bound);

// Sizes 0, 1, ..., 2k. Ratio 2/3, message <= (2k+1)(2k) elements.
ProtocolSpec Protocol1Exact(int k);

// {0} ∪ {floor((1+eps)^j), 2 floor((1+eps)^j) : 0 <= j <= floor(log_{1+eps} k)}
// in increasing order, without duplicates.
std::vector<int> GroupedSizes(int k, double eps);

// Sizes from GroupedSizes. Ratio 2/3 - eps, message
// <= 2k(3 + 2 ln k / ln(1+eps)) elements. Requires eps in (0, 1].
ProtocolSpec Protocol1Grouped(int k, double eps);

// Element count of the message before identical sets were merged.
int64_t RepeatedSolvingRawElements(const Message& message);

// The sets X_0..X_k and Y_0..Y_k built by the efficient protocol's Bob from
// Alice's greedy list.
struct EfficientBobTrace {
  std::vector<ElementSet> x;
  std::vector<ElementSet> y;
  std::vector<double> x_value;
  std::vector<double> y_value;
  ElementSet best;
  double best_value = 0.0;
};

// Bob's side of the efficient protocol. Short lists stand for lists padded
// with zero-value dummies, which are never reported.
EfficientBobTrace EfficientBob(const ValueOracle& oracle,
                               std::span<const Element> alice_list,
                               const ElementSet& bob_set, int k);

// Alice sends the first 2k greedy picks of V_A (fewer if |V_A| < 2k); Bob
// returns the best of the X_p and Y_p sets. Ratio 0.514, message 2k.
ProtocolSpec Protocol3Poly(int k);

// Alice sends a best k-subset of V_A; Bob returns the better of it and a
// best k-subset of V_B. Ratio 1/2, message <= k.
ProtocolSpec BaselineHalf(int k);

// The threshold sieve run across the players. Ratio 1/2 - eps; never
// queries more than k elements.
ProtocolSpec BaselineSieve(int k, double eps);

// Every player forwards everything it holds or received; the last player
// solves exactly.
ProtocolSpec ForwardAllExact(int k);

// Every player forwards the greedy k-subset of what it holds or received;
// the last player returns the greedy k-subset.
ProtocolSpec GreedyForwarding(int k);

// Registry keyed by short names: p1, p1g, p3, half, sieve, forward, greedy.
ProtocolSpec MakeProtocol(std::string_view name, int k, double eps);
std::vector<std::string> ProtocolNames();
// The protocols with a two-player ratio guarantee checked by the suite.
std::vector<std::string> TwoPlayerProtocolNames();

}  // namespace maxcard

#endif  // MAXCARD_PROTOCOLS_H_
