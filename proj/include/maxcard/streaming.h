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

#ifndef MAXCARD_STREAMING_H_
#define MAXCARD_STREAMING_H_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "maxcard/element_set.h"
#include "maxcard/oracle.h"
#include "maxcard/protocol.h"

namespace maxcard {

// A single-pass algorithm whose whole memory state can be written into a
// message.
class StreamAlgorithm {
 public:
  virtual ~StreamAlgorithm() = default;
  virtual void Process(Element e, const ValueOracle& oracle) = 0;
  virtual ElementSet Output(const ValueOracle& oracle) const = 0;
  virtual Message Serialize() const = 0;

  int64_t MemoryElements() const { return Serialize().ElementCount(); }
};

// Builds a fresh algorithm (state == nullptr) or restores one from a
// serialized memory state.
using StreamFactory =
    std::function<std::unique_ptr<StreamAlgorithm>(const Message* state)>;

// Threshold sieve for cardinality-constrained monotone submodular
// maximization: keeps one candidate set per threshold (1+eps)^i in
// [m, 2km], m being the best singleton value seen, and adds an element to a
// set S of threshold v when f(e|S) >= (v/2 - f(S)) / (k - |S|). Every query
// has at most k elements.
class ThresholdSieve : public StreamAlgorithm {
 public:
  ThresholdSieve(int k, double eps);
  static std::unique_ptr<ThresholdSieve> Restore(int k, double eps,
                                                 const Message& state);

  void Process(Element e, const ValueOracle& oracle) override;
  ElementSet Output(const ValueOracle& oracle) const override;
  Message Serialize() const override;

  // Upper bound on the stored elements: k per threshold.
  static double MemoryBound(int k, double eps);

 private:
  int k_;
  double eps_;
  double max_singleton_ = 0.0;
  std::map<int, ElementSet> sets_;
};

StreamFactory SieveFactory(int k, double eps);

// One-way protocol in which every player feeds its own elements (in index
// order) to the stream algorithm restored from the incoming message and
// sends the resulting memory state. The last player outputs the solution.
ProtocolSpec StreamToPlayers(std::string name, int k, StreamFactory factory,
                             double guarantee, double memory_bound);

struct StreamRun {
  ElementSet solution;
  double value = 0.0;
  int64_t max_memory_elements = 0;
};

// Feeds `stream` to `algorithm` and tracks the memory high-water mark.
StreamRun RunStream(StreamAlgorithm& algorithm, std::span<const Element> stream,
                    const ValueOracle& oracle);

// The converse adapter: runs a one-way protocol as a stream algorithm. The
// stream is cut into consecutive chunks of the given sizes, chunk i playing
// the role of V_i; memory is the last message plus the buffered chunk.
class ProtocolStream : public StreamAlgorithm {
 public:
  ProtocolStream(ProtocolSpec spec, std::vector<int> chunk_sizes);

  void Process(Element e, const ValueOracle& oracle) override;
  ElementSet Output(const ValueOracle& oracle) const override;
  Message Serialize() const override;

 private:
  // Runs the sending players whose chunks are complete.
  void Advance(const ValueOracle& oracle);

  ProtocolSpec spec_;
  std::vector<int> chunk_sizes_;
  int player_ = 0;
  ElementSet buffer_;
  std::unique_ptr<Message> last_;
};

}  // namespace maxcard

#endif  // MAXCARD_STREAMING_H_
