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

#include "maxcard/protocol.h"

#include <algorithm>
#include <string>

#include "maxcard/errors.h"

namespace maxcard {
namespace {

std::string PlayerName(int player, int num_players) {
  if (num_players == 2) return player == 0 ? "Alice" : "Bob";
  return "player " + std::to_string(player + 1);
}

ElementSet Visible(const ElementSet& own, const Message* incoming) {
  if (incoming == nullptr) return own;
  return SetUnion(own, incoming->Distinct());
}

Message CallSend(const ProtocolSpec& spec, const PlayerContext& ctx) {
  const std::string who = PlayerName(ctx.player, ctx.num_players);
  Message message;
  try {
    message = spec.send(ctx);
  } catch (const DomainError& e) {
    throw AccessViolationError(spec.name + ": " + who +
                               " queried outside its domain: " + e.what());
  }
  const ElementSet visible = Visible(ctx.own, ctx.incoming);
  for (Element e : message.elements) {
    if (!Contains(visible, e)) {
      throw AccessViolationError(spec.name + ": " + who +
                                 " sent element " + std::to_string(e) +
                                 " it does not hold");
    }
  }
  return message;
}

ElementSet CallDecide(const ProtocolSpec& spec, const PlayerContext& ctx) {
  const std::string who = PlayerName(ctx.player, ctx.num_players);
  ElementSet solution;
  try {
    solution = Normalize(spec.decide(ctx));
  } catch (const DomainError& e) {
    throw AccessViolationError(spec.name + ": " + who +
                               " queried outside its domain: " + e.what());
  }
  if (static_cast<int>(solution.size()) > ctx.k) {
    throw AccessViolationError(spec.name + ": output has " +
                               std::to_string(solution.size()) +
                               " elements, more than k=" +
                               std::to_string(ctx.k));
  }
  if (!IsSubset(solution, Visible(ctx.own, ctx.incoming))) {
    throw AccessViolationError(spec.name + ": output " + ToString(solution) +
                               " is not made of held or received elements");
  }
  return solution;
}

void CheckSpec(const ProtocolSpec& spec, int k) {
  if (!spec.send || !spec.decide) {
    throw PreconditionError("protocol " + spec.name + " lacks a program");
  }
  if (spec.k != k) {
    throw PreconditionError("protocol " + spec.name + " was built for k=" +
                            std::to_string(spec.k) + ", run with k=" +
                            std::to_string(k));
  }
}

}  // namespace

int64_t Transcript::MaxMessageElements() const {
  int64_t best = 0;
  for (const Message& m : messages) best = std::max(best, m.ElementCount());
  return best;
}

int64_t Transcript::MaxMessageBytes() const {
  int64_t best = 0;
  for (const Message& m : messages) best = std::max(best, m.ByteSize());
  return best;
}

int Transcript::MaxQueryCardinality() const {
  int best = 0;
  for (const LedgerSnapshot& l : ledgers) {
    best = std::max(best, l.max_cardinality);
  }
  return best;
}

int64_t Transcript::TotalQueries() const {
  int64_t total = 0;
  for (const LedgerSnapshot& l : ledgers) total += l.queries;
  return total;
}

Transcript RunPlayers(const ProtocolSpec& spec, const Partition& partition,
                      const ValueOracle& oracle, int k, AccessPolicy policy) {
  std::vector<ValueOracle> oracles(partition.num_blocks(), oracle);
  return RunPlayers(spec, partition, oracles, oracle, k, policy);
}

Transcript RunPlayers(const ProtocolSpec& spec, const Partition& partition,
                      std::span<const ValueOracle> player_oracles,
                      const ValueOracle& evaluator, int k,
                      AccessPolicy policy) {
  CheckSpec(spec, k);
  const int p = partition.num_blocks();
  if (p < 2) throw PreconditionError("a protocol needs at least two players");
  if (static_cast<int>(player_oracles.size()) != p) {
    throw PreconditionError("need one oracle per player");
  }
  Transcript transcript;
  transcript.messages.reserve(p);
  const Message* incoming = nullptr;
  for (int i = 0; i < p; ++i) {
    const ElementSet& own = partition.private_set(i);
    const ElementSet domain = policy == AccessPolicy::kModel
                                  ? partition.BlocksUpTo(i)
                                  : Visible(own, incoming);
    const ValueOracle view =
        player_oracles[i].WithChildLedger().Restrict(domain);
    const PlayerContext ctx{i, p, k, view, own, incoming};
    if (i + 1 < p) {
      transcript.messages.push_back(CallSend(spec, ctx));
      incoming = &transcript.messages.back();
    } else {
      transcript.solution = CallDecide(spec, ctx);
    }
    transcript.ledgers.push_back(Snapshot(view.ledger()));
  }
  transcript.value = evaluator.function()->Evaluate(transcript.solution);
  return transcript;
}

Transcript RunTwoPlayer(const ProtocolSpec& spec, const Partition& partition,
                        const ValueOracle& oracle, int k,
                        AccessPolicy policy) {
  if (partition.num_blocks() != 2) {
    throw PreconditionError("two-player run needs exactly two blocks");
  }
  return RunPlayers(spec, partition, oracle, k, policy);
}

Message RunSender(const ProtocolSpec& spec, const ValueOracle& oracle,
                  const ElementSet& own, const Message* incoming, int player,
                  int num_players, int k) {
  CheckSpec(spec, k);
  const ValueOracle view =
      oracle.WithChildLedger().Restrict(Visible(own, incoming));
  const PlayerContext ctx{player, num_players, k, view, own, incoming};
  return CallSend(spec, ctx);
}

ElementSet RunDecider(const ProtocolSpec& spec, const ValueOracle& oracle,
                      const ElementSet& own, const Message* incoming,
                      int player, int num_players, int k) {
  CheckSpec(spec, k);
  const ValueOracle view =
      oracle.WithChildLedger().Restrict(Visible(own, incoming));
  const PlayerContext ctx{player, num_players, k, view, own, incoming};
  return CallDecide(spec, ctx);
}

}  // namespace maxcard
