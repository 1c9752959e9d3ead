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

#include "maxcard/oracle.h"

#include <utility>

#include "maxcard/errors.h"

namespace maxcard {

void QueryLedger::Record(int cardinality) {
  queries_.fetch_add(1, std::memory_order_relaxed);
  int seen = max_cardinality_.load(std::memory_order_relaxed);
  while (cardinality > seen &&
         !max_cardinality_.compare_exchange_weak(seen, cardinality)) {
  }
  if (parent_ != nullptr) parent_->Record(cardinality);
}

LedgerSnapshot Snapshot(const QueryLedger& ledger) {
  return {ledger.queries(), ledger.max_cardinality()};
}

ValueOracle::ValueOracle(std::shared_ptr<const SetFunction> fn)
    : fn_(std::move(fn)) {
  if (fn_ == nullptr) throw PreconditionError("null set function");
  const int n = fn_->ground_size();
  if (n < 1) throw PreconditionError("ground set must be non-empty");
  domain_ = std::make_shared<const ElementSet>(Range(n));
  mask_ = std::make_shared<const std::vector<char>>(n, 1);
  ledger_ = std::make_shared<QueryLedger>();
}

ValueOracle::ValueOracle(std::shared_ptr<const SetFunction> fn,
                         std::shared_ptr<const ElementSet> domain,
                         std::shared_ptr<const std::vector<char>> mask,
                         std::shared_ptr<QueryLedger> ledger)
    : fn_(std::move(fn)),
      domain_(std::move(domain)),
      mask_(std::move(mask)),
      ledger_(std::move(ledger)) {}

bool ValueOracle::InDomain(Element e) const {
  return e >= 0 && e < static_cast<int>(mask_->size()) && (*mask_)[e];
}

bool ValueOracle::InDomain(std::span<const Element> s) const {
  for (Element e : s) {
    if (!InDomain(e)) return false;
  }
  return true;
}

double ValueOracle::Evaluate(std::span<const Element> s) const {
  for (Element e : s) {
    if (!InDomain(e)) {
      throw DomainError("element " + std::to_string(e) +
                        " is outside the oracle domain");
    }
  }
  if (IsNormalized(s)) {
    ledger_->Record(static_cast<int>(s.size()));
    return fn_->Evaluate(s);
  }
  const ElementSet normalized = Normalize(ElementSet(s.begin(), s.end()));
  ledger_->Record(static_cast<int>(normalized.size()));
  return fn_->Evaluate(normalized);
}

double ValueOracle::Marginal(Element v, std::span<const Element> s) const {
  if (Contains(s, v)) {
    throw PreconditionError("marginal of an element already in the set");
  }
  const ElementSet with = SetUnion(s, std::span<const Element>(&v, 1));
  return Evaluate(with) - Evaluate(s);
}

ValueOracle ValueOracle::Restrict(std::span<const Element> subdomain) const {
  auto mask = std::make_shared<std::vector<char>>(mask_->size(), 0);
  auto domain = std::make_shared<ElementSet>();
  for (Element e : subdomain) {
    if (InDomain(e) && !(*mask)[e]) {
      (*mask)[e] = 1;
      domain->push_back(e);
    }
  }
  *domain = Normalize(std::move(*domain));
  return ValueOracle(fn_, std::move(domain), std::move(mask), ledger_);
}

ValueOracle ValueOracle::WithChildLedger() const {
  return ValueOracle(fn_, domain_, mask_,
                     std::make_shared<QueryLedger>(ledger_));
}

void CardinalityConstraint::Validate(int ground_size) const {
  if (k < 1 || k > ground_size) {
    throw PreconditionError("cardinality bound k=" + std::to_string(k) +
                            " outside [1, " + std::to_string(ground_size) +
                            "]");
  }
}

}  // namespace maxcard
