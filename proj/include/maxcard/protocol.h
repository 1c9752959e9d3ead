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

#ifndef MAXCARD_PROTOCOL_H_
#define MAXCARD_PROTOCOL_H_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "maxcard/element_set.h"
#include "maxcard/oracle.h"
#include "maxcard/partition.h"

namespace maxcard {

// Reporting constant: each element index in a message counts as 8 bytes.
inline constexpr int64_t kBytesPerElement = 8;

// A one-way message: an ordered list of element indices plus opaque bytes.
struct Message {
  std::vector<Element> elements;
  std::vector<uint8_t> aux;

  int64_t ElementCount() const {
    return static_cast<int64_t>(elements.size());
  }
  int64_t ByteSize() const {
    return kBytesPerElement * ElementCount() +
           static_cast<int64_t>(aux.size());
  }
  // The distinct elements mentioned by the message.
  ElementSet Distinct() const { return Normalize(elements); }
};

// What one player sees while running its program.
struct PlayerContext {
  int player = 0;  // 0-based
  int num_players = 0;
  int k = 0;
  const ValueOracle& oracle;
  const ElementSet& own;       // V_i
  const Message* incoming;     // nullptr for the first player
};

using SendProgram = std::function<Message(const PlayerContext&)>;
using DecideProgram = std::function<ElementSet(const PlayerContext&)>;

// A one-way protocol: every player but the last runs `send`, the last player
// runs `decide`.
struct ProtocolSpec {
  std::string name;
  int k = 0;
  SendProgram send;
  DecideProgram decide;
  // Advertised approximation ratio.
  double guarantee = 0.0;
  // Advertised bound on the elements of one message.
  double message_bound = 0.0;
  // Whether the protocol promises to query only sets of size <= k.
  bool feasible_queries_only = false;
};

enum class AccessPolicy {
  // Player i may query any subset of W_1 ∪ ... ∪ W_i.
  kModel,
  // Player i may query only V_i plus the elements it received.
  kStrict,
};

struct Transcript {
  std::vector<Message> messages;
  std::vector<LedgerSnapshot> ledgers;  // one per player
  ElementSet solution;
  double value = 0.0;

  int64_t MaxMessageElements() const;
  int64_t MaxMessageBytes() const;
  int MaxQueryCardinality() const;
  int64_t TotalQueries() const;
};

// Runs the protocol with every player querying its own view of `oracle`.
// Enforces: each player's oracle is restricted per `policy`; messages only
// mention V_i and received elements; the output is a subset of V_last plus
// received elements with at most k elements. Violations and out-of-domain
// queries raise AccessViolationError. Queries are also recorded in the
// ledger of `oracle`.
Transcript RunPlayers(const ProtocolSpec& spec, const Partition& partition,
                      const ValueOracle& oracle, int k,
                      AccessPolicy policy = AccessPolicy::kModel);

// As above, but player i queries player_oracles[i] (all on the same ground
// set). Used by reductions in which players hold different, yet locally
// indistinguishable, functions.
Transcript RunPlayers(const ProtocolSpec& spec, const Partition& partition,
                      std::span<const ValueOracle> player_oracles,
                      const ValueOracle& evaluator, int k,
                      AccessPolicy policy = AccessPolicy::kModel);

// RunPlayers for a partition with exactly two blocks.
Transcript RunTwoPlayer(const ProtocolSpec& spec, const Partition& partition,
                        const ValueOracle& oracle, int k,
                        AccessPolicy policy = AccessPolicy::kModel);

// Runs a single sending player in isolation, with an oracle restricted to
// `own` plus the incoming elements. Used by the robust wrapper.
Message RunSender(const ProtocolSpec& spec, const ValueOracle& oracle,
                  const ElementSet& own, const Message* incoming, int player,
                  int num_players, int k);
// Runs the deciding player in isolation, restricted to `own` plus the
// incoming elements, and validates the output.
ElementSet RunDecider(const ProtocolSpec& spec, const ValueOracle& oracle,
                      const ElementSet& own, const Message* incoming,
                      int player, int num_players, int k);

}  // namespace maxcard

#endif  // MAXCARD_PROTOCOL_H_
