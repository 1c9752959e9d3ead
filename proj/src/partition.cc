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

#include "maxcard/partition.h"

#include <utility>

#include "maxcard/errors.h"

namespace maxcard {

Partition::Partition(int ground_size, std::vector<ElementSet> blocks,
                     std::vector<ElementSet> private_sets)
    : ground_size_(ground_size),
      blocks_(std::move(blocks)),
      private_(std::move(private_sets)) {
  if (ground_size_ < 1) throw PreconditionError("empty ground set");
  if (blocks_.empty()) throw PreconditionError("partition without blocks");
  if (blocks_.size() != private_.size()) {
    throw PreconditionError("one private set per block is required");
  }
  std::vector<int> owner(ground_size_, -1);
  for (size_t i = 0; i < blocks_.size(); ++i) {
    blocks_[i] = Normalize(std::move(blocks_[i]));
    private_[i] = Normalize(std::move(private_[i]));
    for (Element e : blocks_[i]) {
      if (e < 0 || e >= ground_size_) {
        throw PreconditionError("block element out of range: " +
                                std::to_string(e));
      }
      if (owner[e] != -1) {
        throw PreconditionError("blocks overlap at element " +
                                std::to_string(e));
      }
      owner[e] = static_cast<int>(i);
    }
    if (!IsSubset(private_[i], blocks_[i])) {
      throw PreconditionError("private set " + std::to_string(i) +
                              " is not inside its block");
    }
  }
  for (int e = 0; e < ground_size_; ++e) {
    if (owner[e] == -1) {
      throw PreconditionError("element " + std::to_string(e) +
                              " is in no block");
    }
  }
}

Partition Partition::TwoPlayer(int ground_size, ElementSet alice_block,
                               ElementSet alice_private,
                               ElementSet bob_private) {
  alice_block = Normalize(std::move(alice_block));
  ElementSet bob_block = SetDifference(Range(ground_size), alice_block);
  return Partition(ground_size, {std::move(alice_block), std::move(bob_block)},
                   {std::move(alice_private), std::move(bob_private)});
}

ElementSet Partition::BlocksUpTo(int i) const {
  ElementSet out;
  for (int j = 0; j <= i && j < num_blocks(); ++j) {
    out = SetUnion(out, blocks_[j]);
  }
  return out;
}

ElementSet Partition::AllPrivate() const {
  ElementSet out;
  for (const ElementSet& v : private_) out = SetUnion(out, v);
  return out;
}

}  // namespace maxcard
