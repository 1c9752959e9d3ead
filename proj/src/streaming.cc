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

#include "maxcard/streaming.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "maxcard/bytes.h"
#include "maxcard/errors.h"

namespace maxcard {

ThresholdSieve::ThresholdSieve(int k, double eps) : k_(k), eps_(eps) {
  if (k < 1) throw PreconditionError("sieve needs k >= 1");
  if (!(eps > 0.0 && eps <= 1.0)) {
    throw PreconditionError("sieve needs eps in (0, 1]");
  }
}

std::unique_ptr<ThresholdSieve> ThresholdSieve::Restore(int k, double eps,
                                                        const Message& state) {
  auto sieve = std::make_unique<ThresholdSieve>(k, eps);
  ByteReader reader(state.aux);
  sieve->max_singleton_ = reader.GetF64();
  const uint32_t count = reader.GetU32();
  for (uint32_t i = 0; i < count; ++i) {
    const int exponent = reader.GetI32();
    const uint32_t size = reader.GetU32();
    ElementSet set;
    for (uint32_t j = 0; j < size; ++j) {
      const uint32_t pos = reader.GetU32();
      if (pos >= state.elements.size()) {
        throw PreconditionError("sieve state references a missing element");
      }
      set.push_back(state.elements[pos]);
    }
    sieve->sets_[exponent] = Normalize(std::move(set));
  }
  if (!reader.AtEnd()) throw PreconditionError("trailing sieve state bytes");
  return sieve;
}

void ThresholdSieve::Process(Element e, const ValueOracle& oracle) {
  const Element single[1] = {e};
  max_singleton_ = std::max(max_singleton_, oracle.Evaluate(single));
  if (max_singleton_ <= 0.0) return;
  const double base = std::log1p(eps_);
  const int lo =
      static_cast<int>(std::ceil(std::log(max_singleton_) / base - 1e-12));
  const int hi = static_cast<int>(
      std::floor(std::log(2.0 * k_ * max_singleton_) / base + 1e-12));
  sets_.erase(sets_.begin(), sets_.lower_bound(lo));
  for (int i = lo; i <= hi; ++i) {
    ElementSet& s = sets_[i];
    const int size = static_cast<int>(s.size());
    if (size >= k_ || Contains(s, e)) continue;
    const double threshold = std::pow(1.0 + eps_, i);
    const double current = oracle.Evaluate(s);
    const ElementSet with = SetUnion(s, single);
    const double gain = oracle.Evaluate(with) - current;
    if (gain >= (threshold / 2.0 - current) / (k_ - size)) s = with;
  }
}

ElementSet ThresholdSieve::Output(const ValueOracle& oracle) const {
  ElementSet best;
  double best_value = -1.0;
  for (const auto& [exponent, s] : sets_) {
    const double value = oracle.Evaluate(s);
    if (best_value < 0.0 || value > best_value + kValueTolerance) {
      best = s;
      best_value = value;
    }
  }
  return best;
}

Message ThresholdSieve::Serialize() const {
  Message message;
  ElementSet all;
  for (const auto& [exponent, s] : sets_) all = SetUnion(all, s);
  message.elements = all;
  ByteWriter writer;
  writer.PutF64(max_singleton_);
  writer.PutU32(static_cast<uint32_t>(sets_.size()));
  for (const auto& [exponent, s] : sets_) {
    writer.PutI32(exponent);
    writer.PutU32(static_cast<uint32_t>(s.size()));
    for (Element e : s) {
      const auto pos = std::lower_bound(all.begin(), all.end(), e) - all.begin();
      writer.PutU32(static_cast<uint32_t>(pos));
    }
  }
  message.aux = writer.Take();
  return message;
}

double ThresholdSieve::MemoryBound(int k, double eps) {
  return k * (std::floor(std::log(2.0 * k) / std::log1p(eps)) + 1.0);
}

StreamFactory SieveFactory(int k, double eps) {
  return [k, eps](const Message* state) -> std::unique_ptr<StreamAlgorithm> {
    if (state == nullptr) return std::make_unique<ThresholdSieve>(k, eps);
    return ThresholdSieve::Restore(k, eps, *state);
  };
}

ProtocolSpec StreamToPlayers(std::string name, int k, StreamFactory factory,
                             double guarantee, double memory_bound) {
  ProtocolSpec spec;
  spec.name = std::move(name);
  spec.k = k;
  spec.guarantee = guarantee;
  spec.message_bound = memory_bound;
  spec.send = [factory](const PlayerContext& ctx) {
    std::unique_ptr<StreamAlgorithm> algorithm = factory(ctx.incoming);
    for (Element e : ctx.own) algorithm->Process(e, ctx.oracle);
    return algorithm->Serialize();
  };
  spec.decide = [factory](const PlayerContext& ctx) {
    std::unique_ptr<StreamAlgorithm> algorithm = factory(ctx.incoming);
    for (Element e : ctx.own) algorithm->Process(e, ctx.oracle);
    return algorithm->Output(ctx.oracle);
  };
  return spec;
}

StreamRun RunStream(StreamAlgorithm& algorithm,
                    std::span<const Element> stream,
                    const ValueOracle& oracle) {
  StreamRun run;
  run.max_memory_elements = algorithm.MemoryElements();
  for (Element e : stream) {
    algorithm.Process(e, oracle);
    run.max_memory_elements =
        std::max(run.max_memory_elements, algorithm.MemoryElements());
  }
  run.solution = Normalize(algorithm.Output(oracle));
  run.value = oracle.function()->Evaluate(run.solution);
  return run;
}

ProtocolStream::ProtocolStream(ProtocolSpec spec, std::vector<int> chunk_sizes)
    : spec_(std::move(spec)), chunk_sizes_(std::move(chunk_sizes)) {
  if (chunk_sizes_.size() < 2) {
    throw PreconditionError("a protocol stream needs at least two chunks");
  }
}

void ProtocolStream::Advance(const ValueOracle& oracle) {
  const int p = static_cast<int>(chunk_sizes_.size());
  while (player_ + 1 < p &&
         static_cast<int>(buffer_.size()) == chunk_sizes_[player_]) {
    const PlayerContext ctx{player_, p, spec_.k, oracle, buffer_, last_.get()};
    last_ = std::make_unique<Message>(spec_.send(ctx));
    buffer_.clear();
    ++player_;
  }
}

void ProtocolStream::Process(Element e, const ValueOracle& oracle) {
  Advance(oracle);
  buffer_ = SetUnion(buffer_, std::span<const Element>(&e, 1));
  Advance(oracle);
}

ElementSet ProtocolStream::Output(const ValueOracle& oracle) const {
  const int p = static_cast<int>(chunk_sizes_.size());
  // Players whose (possibly empty) chunks are complete but who have not run
  // yet are run on copies.
  int player = player_;
  ElementSet buffer = buffer_;
  std::unique_ptr<Message> last =
      last_ ? std::make_unique<Message>(*last_) : nullptr;
  while (player + 1 < p) {
    const PlayerContext ctx{player, p, spec_.k, oracle, buffer, last.get()};
    last = std::make_unique<Message>(spec_.send(ctx));
    buffer.clear();
    ++player;
  }
  const PlayerContext ctx{p - 1, p, spec_.k, oracle, buffer, last.get()};
  return spec_.decide(ctx);
}

Message ProtocolStream::Serialize() const {
  Message memory;
  if (last_) memory = *last_;
  memory.elements.insert(memory.elements.end(), buffer_.begin(),
                         buffer_.end());
  return memory;
}

}  // namespace maxcard
