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

#include "maxcard/protocols.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "maxcard/bytes.h"
#include "maxcard/errors.h"
#include "maxcard/solvers.h"
#include "maxcard/streaming.h"

namespace maxcard {
namespace {

ElementSet Received(const PlayerContext& ctx) {
  return ctx.incoming == nullptr ? ElementSet{} : ctx.incoming->Distinct();
}

int Clamp(int rounds, size_t available) {
  return std::min(rounds, static_cast<int>(available));
}

}  // namespace

ProtocolSpec RepeatedSolving(std::string name, int k, std::vector<int> sizes,
                             double guarantee, double message_bound) {
  ProtocolSpec spec;
  spec.name = std::move(name);
  spec.k = k;
  spec.guarantee = guarantee;
  spec.message_bound = message_bound;
  spec.send = [sizes](const PlayerContext& ctx) {
    std::vector<ElementSet> distinct;
    std::vector<uint32_t> slot;
    for (int i : sizes) {
      ElementSet s = BruteForceOpt(ctx.oracle, ctx.own, i).elements;
      auto it = std::find(distinct.begin(), distinct.end(), s);
      slot.push_back(static_cast<uint32_t>(it - distinct.begin()));
      if (it == distinct.end()) distinct.push_back(std::move(s));
    }
    Message message;
    ByteWriter writer;
    writer.PutU32(static_cast<uint32_t>(distinct.size()));
    for (const ElementSet& s : distinct) {
      writer.PutU32(static_cast<uint32_t>(s.size()));
      message.elements.insert(message.elements.end(), s.begin(), s.end());
    }
    writer.PutU32(static_cast<uint32_t>(sizes.size()));
    for (size_t j = 0; j < sizes.size(); ++j) {
      writer.PutU32(static_cast<uint32_t>(sizes[j]));
      writer.PutU32(slot[j]);
    }
    message.aux = writer.Take();
    return message;
  };
  spec.decide = [](const PlayerContext& ctx) {
    const ElementSet pool = SetUnion(ctx.own, Received(ctx));
    return BruteForceOpt(ctx.oracle, pool, ctx.k).elements;
  };
  return spec;
}

ProtocolSpec Protocol1Exact(int k) {
  std::vector<int> sizes;
  for (int i = 0; i <= 2 * k; ++i) sizes.push_back(i);
  return RepeatedSolving("p1", k, std::move(sizes), 2.0 / 3.0,
                         (2.0 * k + 1) * (2.0 * k));
}

std::vector<int> GroupedSizes(int k, double eps) {
  if (k < 1) throw PreconditionError("grouped sizes need k >= 1");
  if (!(eps > 0.0 && eps <= 1.0)) {
    throw PreconditionError("grouped sizes need eps in (0, 1]");
  }
  std::vector<int> sizes{0};
  // Largest j with (1+eps)^j <= k, guarding against rounding at exact powers.
  for (int j = 0;; ++j) {
    const double power = std::pow(1.0 + eps, j);
    if (power > k * (1.0 + 1e-12)) break;
    const int base = static_cast<int>(std::floor(power + 1e-12));
    sizes.push_back(base);
    sizes.push_back(2 * base);
  }
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  return sizes;
}

ProtocolSpec Protocol1Grouped(int k, double eps) {
  const double bound =
      2.0 * k * (3.0 + 2.0 * std::log(static_cast<double>(k)) / std::log1p(eps));
  return RepeatedSolving("p1g", k, GroupedSizes(k, eps), 2.0 / 3.0 - eps,
                         bound);
}

int64_t RepeatedSolvingRawElements(const Message& message) {
  ByteReader reader(message.aux);
  std::vector<int64_t> lengths(reader.GetU32());
  for (int64_t& len : lengths) len = reader.GetU32();
  const uint32_t count = reader.GetU32();
  int64_t raw = 0;
  for (uint32_t j = 0; j < count; ++j) {
    reader.GetU32();
    raw += lengths.at(reader.GetU32());
  }
  return raw;
}

EfficientBobTrace EfficientBob(const ValueOracle& oracle,
                               std::span<const Element> alice_list,
                               const ElementSet& bob_set, int k) {
  EfficientBobTrace trace;
  const ElementSet alice_all =
      Normalize(ElementSet(alice_list.begin(), alice_list.end()));
  for (int p = 0; p <= k; ++p) {
    const int taken = Clamp(p, alice_list.size());
    const ElementSet prefix =
        Normalize(ElementSet(alice_list.begin(), alice_list.begin() + taken));
    const std::vector<Element> s_p =
        Greedy(oracle, bob_set, Clamp(k - p, bob_set.size()), prefix);
    trace.x.push_back(SetUnion(prefix, Normalize(s_p)));
  }
  for (int p = 0; p <= k; ++p) {
    const ElementSet q_p = Normalize(
        Greedy(oracle, bob_set, Clamp(k - p, bob_set.size())));
    const std::vector<Element> top_up =
        Greedy(oracle, alice_all, Clamp(p, alice_all.size()), q_p);
    trace.y.push_back(SetUnion(q_p, Normalize(top_up)));
  }
  bool first = true;
  auto consider = [&](const ElementSet& s, std::vector<double>& values) {
    const double v = oracle.Evaluate(s);
    values.push_back(v);
    if (first || v > trace.best_value + kValueTolerance) {
      trace.best = s;
      trace.best_value = v;
      first = false;
    }
  };
  for (const ElementSet& s : trace.x) consider(s, trace.x_value);
  for (const ElementSet& s : trace.y) consider(s, trace.y_value);
  return trace;
}

ProtocolSpec Protocol3Poly(int k) {
  ProtocolSpec spec;
  spec.name = "p3";
  spec.k = k;
  spec.guarantee = 0.514;
  spec.message_bound = 2.0 * k;
  spec.send = [](const PlayerContext& ctx) {
    Message message;
    message.elements =
        Greedy(ctx.oracle, ctx.own, Clamp(2 * ctx.k, ctx.own.size()));
    return message;
  };
  spec.decide = [](const PlayerContext& ctx) {
    const std::vector<Element> list =
        ctx.incoming == nullptr ? std::vector<Element>{}
                                : ctx.incoming->elements;
    return EfficientBob(ctx.oracle, list, ctx.own, ctx.k).best;
  };
  return spec;
}

ProtocolSpec BaselineHalf(int k) {
  ProtocolSpec spec;
  spec.name = "half";
  spec.k = k;
  spec.guarantee = 0.5;
  spec.message_bound = k;
  spec.feasible_queries_only = true;
  spec.send = [](const PlayerContext& ctx) {
    Message message;
    message.elements = BruteForceOpt(ctx.oracle, ctx.own, ctx.k).elements;
    return message;
  };
  spec.decide = [](const PlayerContext& ctx) {
    const Solution mine = BruteForceOpt(ctx.oracle, ctx.own, ctx.k);
    const ElementSet theirs = Received(ctx);
    if (static_cast<int>(theirs.size()) <= ctx.k &&
        ctx.oracle.Evaluate(theirs) > mine.value + kValueTolerance) {
      return theirs;
    }
    return mine.elements;
  };
  return spec;
}

ProtocolSpec BaselineSieve(int k, double eps) {
  ProtocolSpec spec = StreamToPlayers("sieve", k, SieveFactory(k, eps),
                                      0.5 - eps,
                                      ThresholdSieve::MemoryBound(k, eps));
  spec.feasible_queries_only = true;
  return spec;
}

ProtocolSpec ForwardAllExact(int k) {
  ProtocolSpec spec;
  spec.name = "forward";
  spec.k = k;
  spec.guarantee = 1.0;
  spec.message_bound = kDefaultEnumerationGuard;
  spec.send = [](const PlayerContext& ctx) {
    Message message;
    message.elements = SetUnion(ctx.own, Received(ctx));
    return message;
  };
  spec.decide = [](const PlayerContext& ctx) {
    return BruteForceOpt(ctx.oracle, SetUnion(ctx.own, Received(ctx)), ctx.k)
        .elements;
  };
  return spec;
}

ProtocolSpec GreedyForwarding(int k) {
  ProtocolSpec spec;
  spec.name = "greedy";
  spec.k = k;
  spec.guarantee = 0.0;
  spec.message_bound = k;
  spec.feasible_queries_only = true;
  auto pick = [](const PlayerContext& ctx) {
    const ElementSet pool = SetUnion(ctx.own, Received(ctx));
    return Greedy(ctx.oracle, pool, Clamp(ctx.k, pool.size()));
  };
  spec.send = [pick](const PlayerContext& ctx) {
    Message message;
    message.elements = pick(ctx);
    return message;
  };
  spec.decide = [pick](const PlayerContext& ctx) {
    return Normalize(pick(ctx));
  };
  return spec;
}

ProtocolSpec MakeProtocol(std::string_view name, int k, double eps) {
  if (name == "p1") return Protocol1Exact(k);
  if (name == "p1g") return Protocol1Grouped(k, eps);
  if (name == "p3") return Protocol3Poly(k);
  if (name == "half") return BaselineHalf(k);
  if (name == "sieve") return BaselineSieve(k, eps);
  if (name == "forward") return ForwardAllExact(k);
  if (name == "greedy") return GreedyForwarding(k);
  throw PreconditionError("unknown protocol: " + std::string(name));
}

std::vector<std::string> ProtocolNames() {
  return {"p1", "p1g", "p3", "half", "sieve", "forward", "greedy"};
}

std::vector<std::string> TwoPlayerProtocolNames() {
  return {"p1", "p1g", "p3", "half", "sieve"};
}

}  // namespace maxcard
