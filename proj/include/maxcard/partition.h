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

#ifndef MAXCARD_PARTITION_H_
#define MAXCARD_PARTITION_H_

#include <string>
#include <vector>

#include "maxcard/element_set.h"

namespace maxcard {

struct GroundSet {
  int size = 0;
  // Optional display names, either empty or one per element.
  std::vector<std::string> labels;
};

// The ground set split into p disjoint blocks W_1..W_p (stored 0-based), each
// with a private subset V_i of elements actually held by player i.
class Partition {
 public:
  // Throws PreconditionError unless the blocks are disjoint, cover
  // {0..ground_size-1}, and every private set lies in its block.
  Partition(int ground_size, std::vector<ElementSet> blocks,
            std::vector<ElementSet> private_sets);

  // Alice holds block alice_block; Bob holds the rest.
  static Partition TwoPlayer(int ground_size, ElementSet alice_block,
                             ElementSet alice_private, ElementSet bob_private);

  int ground_size() const { return ground_size_; }
  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  const ElementSet& block(int i) const { return blocks_[i]; }
  const ElementSet& private_set(int i) const { return private_[i]; }
  const std::vector<ElementSet>& blocks() const { return blocks_; }
  const std::vector<ElementSet>& private_sets() const { return private_; }

  // W_0 ∪ ... ∪ W_i.
  ElementSet BlocksUpTo(int i) const;
  // V_0 ∪ ... ∪ V_{p-1}.
  ElementSet AllPrivate() const;

 private:
  int ground_size_;
  std::vector<ElementSet> blocks_;
  std::vector<ElementSet> private_;
};

}  // namespace maxcard

#endif  // MAXCARD_PARTITION_H_
