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

#ifndef MAXCARD_ORACLE_H_
#define MAXCARD_ORACLE_H_

#include <atomic>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "maxcard/element_set.h"

namespace maxcard {

// Values within this tolerance are treated as tied.
inline constexpr double kValueTolerance = 1e-9;

// A set function on the ground set {0, ..., ground_size() - 1}. Evaluate() is
// always called with a normalized set and must be safe to call concurrently.
class SetFunction {
 public:
  virtual ~SetFunction() = default;
  virtual int ground_size() const = 0;
  virtual double Evaluate(std::span<const Element> s) const = 0;
};

// Counts queries and the largest queried cardinality. Updates are lock-free,
// so one ledger can be shared by parallel evaluation workers. A ledger may
// forward every record to a parent ledger.
class QueryLedger {
 public:
  explicit QueryLedger(std::shared_ptr<QueryLedger> parent = nullptr)
      : parent_(std::move(parent)) {}
  QueryLedger(const QueryLedger&) = delete;
  QueryLedger& operator=(const QueryLedger&) = delete;

  void Record(int cardinality);

  int64_t queries() const { return queries_.load(); }
  int max_cardinality() const { return max_cardinality_.load(); }
  // True iff some queried set had more than k elements.
  bool UsedInfeasibleQuery(int k) const { return max_cardinality() > k; }

 private:
  std::shared_ptr<QueryLedger> parent_;
  std::atomic<int64_t> queries_{0};
  std::atomic<int> max_cardinality_{0};
};

struct LedgerSnapshot {
  int64_t queries = 0;
  int max_cardinality = 0;
};

LedgerSnapshot Snapshot(const QueryLedger& ledger);

// Value-oracle access to a set function: a function, a domain it may be
// queried on, and a ledger recording the queries. Copies share the ledger.
class ValueOracle {
 public:
  // Full domain, fresh ledger.
  explicit ValueOracle(std::shared_ptr<const SetFunction> fn);

  // Throws DomainError if s is not inside the domain. s need not be
  // normalized.
  double Evaluate(std::span<const Element> s) const;
  double Evaluate(std::initializer_list<Element> s) const {
    return Evaluate(std::span<const Element>(s.begin(), s.size()));
  }
  // f(v | s) = f(s + v) - f(s). Both evaluations are recorded.
  double Marginal(Element v, std::span<const Element> s) const;

  // Domain intersected with subdomain; the ledger is shared.
  ValueOracle Restrict(std::span<const Element> subdomain) const;
  // Same domain; a fresh ledger that also forwards to this oracle's ledger.
  ValueOracle WithChildLedger() const;

  bool InDomain(Element e) const;
  bool InDomain(std::span<const Element> s) const;
  const ElementSet& domain() const { return *domain_; }
  int ground_size() const { return fn_->ground_size(); }

  const QueryLedger& ledger() const { return *ledger_; }
  const std::shared_ptr<const SetFunction>& function() const { return fn_; }

 private:
  ValueOracle(std::shared_ptr<const SetFunction> fn,
              std::shared_ptr<const ElementSet> domain,
              std::shared_ptr<const std::vector<char>> mask,
              std::shared_ptr<QueryLedger> ledger);

  std::shared_ptr<const SetFunction> fn_;
  std::shared_ptr<const ElementSet> domain_;
  std::shared_ptr<const std::vector<char>> mask_;
  std::shared_ptr<QueryLedger> ledger_;
};

struct CardinalityConstraint {
  int k = 1;
  // Throws PreconditionError unless 1 <= k <= ground_size.
  void Validate(int ground_size) const;
};

}  // namespace maxcard

#endif  // MAXCARD_ORACLE_H_
