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

#include "maxcard/element_set.h"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <sstream>

namespace maxcard {

ElementSet Normalize(ElementSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool IsNormalized(std::span<const Element> s) {
  return std::adjacent_find(s.begin(), s.end(),
                            [](Element a, Element b) { return a >= b; }) ==
         s.end();
}

ElementSet SetUnion(std::span<const Element> a, std::span<const Element> b) {
  ElementSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

ElementSet SetDifference(std::span<const Element> a,
                         std::span<const Element> b) {
  ElementSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

ElementSet SetIntersection(std::span<const Element> a,
                           std::span<const Element> b) {
  ElementSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

bool Contains(std::span<const Element> s, Element e) {
  return std::binary_search(s.begin(), s.end(), e);
}

bool IsSubset(std::span<const Element> sub, std::span<const Element> super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

bool Disjoint(std::span<const Element> a, std::span<const Element> b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

ElementSet Range(int n) {
  ElementSet out(std::max(n, 0));
  std::iota(out.begin(), out.end(), 0);
  return out;
}

std::string ToString(std::span<const Element> s) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i > 0) os << ",";
    os << s[i];
  }
  os << "}";
  return os.str();
}

}  // namespace maxcard
