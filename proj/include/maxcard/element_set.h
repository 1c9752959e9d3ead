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

#ifndef MAXCARD_ELEMENT_SET_H_
#define MAXCARD_ELEMENT_SET_H_

#include <span>
#include <string>
#include <vector>

namespace maxcard {

// Elements of a ground set are dense indices 0..N-1.
using Element = int;

// A set of elements. Unless stated otherwise, ElementSets are kept sorted and
// free of duplicates.
using ElementSet = std::vector<Element>;

// Sorts and removes duplicates.
ElementSet Normalize(ElementSet s);
bool IsNormalized(std::span<const Element> s);

ElementSet SetUnion(std::span<const Element> a, std::span<const Element> b);
ElementSet SetDifference(std::span<const Element> a,
                         std::span<const Element> b);
ElementSet SetIntersection(std::span<const Element> a,
                           std::span<const Element> b);
bool Contains(std::span<const Element> s, Element e);
bool IsSubset(std::span<const Element> sub, std::span<const Element> super);
bool Disjoint(std::span<const Element> a, std::span<const Element> b);

// {0, 1, ..., n-1}.
ElementSet Range(int n);

// "{1,4,7}".
std::string ToString(std::span<const Element> s);

}  // namespace maxcard

#endif  // MAXCARD_ELEMENT_SET_H_
