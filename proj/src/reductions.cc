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

#include "maxcard/reductions.h"

#include <atomic>
#include <cmath>
#include <memory>
#include <random>

#include "maxcard/errors.h"
#include "maxcard/hardness.h"
#include "maxcard/multilinear.h"
#include "maxcard/seeding.h"

namespace maxcard {
namespace {

void CheckBits(const std::vector<int>& x) {
  for (int b : x) {
    if (b != 0 && b != 1) throw PreconditionError("bit strings hold 0 or 1");
  }
}

int CeilLog2(int n) {
  int bits = 0;
  while ((1LL << bits) < n) ++bits;
  return bits;
}

}  // namespace

void IndexInstance::Validate() const {
  if (x.empty()) throw PreconditionError("index instance needs n >= 1");
  CheckBits(x);
  if (t < 0 || t >= n()) throw PreconditionError("index out of range");
}

void ChainInstance::Validate() const {
  if (p < 2 || n < 1) throw PreconditionError("chain needs p >= 2, n >= 1");
  if (which_case != 0 && which_case != 1) {
    throw PreconditionError("case must be 0 or 1");
  }
  if (static_cast<int>(x.size()) != p - 1 ||
      static_cast<int>(t.size()) != p - 1) {
    throw PreconditionError("chain needs p-1 strings and p-1 indices");
  }
  for (int i = 0; i < p - 1; ++i) {
    if (static_cast<int>(x[i].size()) != n) {
      throw PreconditionError("chain string of wrong length");
    }
    CheckBits(x[i]);
    if (t[i] < 0 || t[i] >= n) throw PreconditionError("index out of range");
    if (x[i][t[i]] != which_case) {
      throw PreconditionError("chain promise violated");
    }
  }
}

IndexInstance ChainInstance::AsIndex() const {
  if (p != 2) throw PreconditionError("only a two-player chain is an index");
  return IndexInstance{x[0], t[0]};
}

ChainInstance SampleChain(int p, int n, int which_case, uint64_t seed) {
  if (p < 2 || n < 1) throw PreconditionError("chain needs p >= 2, n >= 1");
  if (which_case != 0 && which_case != 1) {
    throw PreconditionError("case must be 0 or 1");
  }
  std::mt19937_64 rng = MakeRng(seed, 0);
  std::uniform_int_distribution<int> index(0, n - 1);
  std::bernoulli_distribution bit(0.5);
  ChainInstance inst;
  inst.p = p;
  inst.n = n;
  inst.which_case = which_case;
  for (int i = 0; i < p - 1; ++i) {
    std::vector<int> x(n);
    const int t = index(rng);
    for (int j = 0; j < n; ++j) x[j] = bit(rng) ? 1 : 0;
    x[t] = which_case;
    inst.x.push_back(std::move(x));
    inst.t.push_back(t);
  }
  return inst;
}

double IndexThreshold(int k) {
  if (k < 2) throw PreconditionError("index threshold needs k >= 2");
  return 2.0 * k / (3.0 * (k - 1));
}

double ChainThreshold(int p) {
  const double h = HarmonicNumber(p);
  return p + h * h;
}

ReductionOutcome ReduceIndexToMaxCard(const IndexInstance& inst, int k,
                                      const ProtocolSpec& inner) {
  inst.Validate();
  if (k < 2) throw PreconditionError("index reduction needs k >= 2");
  const int n = inst.n();
  auto truth = std::make_shared<MultilinearHardnessFn>(n, k, inst.t);
  auto blind = std::make_shared<MultilinearHardnessFn>(n, k, 0);
  ElementSet v_a;
  for (int j = 0; j < n; ++j) {
    if (inst.x[j] == 1) v_a = SetUnion(v_a, truth->UGroup(j));
  }
  const Partition partition = Partition::TwoPlayer(
      truth->ground_size(), truth->UBlock(), v_a, ElementSet{truth->w()});
  const ValueOracle evaluator(truth);
  const std::vector<ValueOracle> players{ValueOracle(blind), evaluator};

  ReductionOutcome out;
  out.ground_size = truth->ground_size();
  out.threshold = IndexThreshold(k);
  out.transcript = RunPlayers(inner, partition, players, evaluator, k);
  out.value = out.transcript.value;
  out.decision = out.value > out.threshold + kValueTolerance ? 1 : 0;
  out.max_message_bits = 8 * out.transcript.MaxMessageBytes();
  return out;
}

ReductionOutcome ReduceChainToMaxCard(const ChainInstance& inst,
                                      const ProtocolSpec& inner) {
  inst.Validate();
  const int p = inst.p;
  const int n = inst.n;
  auto weights = std::make_shared<const HardnessWeights>(MakeWeights(p));
  std::vector<Element> hidden(p);
  for (int i = 0; i < p; ++i) {
    hidden[i] = i * n + (i < p - 1 ? inst.t[i] : 0);
  }
  auto truth = std::make_shared<HardnessFn>(weights, n, hidden);

  std::vector<ElementSet> blocks;
  std::vector<ElementSet> owned;
  std::vector<ValueOracle> players;
  for (int i = 0; i < p; ++i) {
    blocks.push_back(truth->Block(i));
    ElementSet v;
    for (int j = 0; j < n; ++j) {
      if (i == p - 1 || inst.x[i][j] == 1) v.push_back(i * n + j);
    }
    owned.push_back(std::move(v));
    // Player i knows t[0..i-1], i.e. hidden elements of blocks 0..i-1.
    std::vector<Element> view(p);
    for (int b = 0; b < p; ++b) view[b] = b < i ? hidden[b] : b * n;
    players.emplace_back(std::make_shared<HardnessFn>(weights, n, view));
  }
  const Partition partition(p * n, std::move(blocks), std::move(owned));
  const ValueOracle evaluator(truth);

  ReductionOutcome out;
  out.ground_size = p * n;
  out.threshold = ChainThreshold(p);
  out.transcript = RunPlayers(inner, partition, players, evaluator, p);
  out.value = out.transcript.value;
  out.decision = out.value > out.threshold + kValueTolerance ? 1 : 0;
  out.index_bits = static_cast<int64_t>(p) * CeilLog2(n);
  out.max_message_bits = 8 * out.transcript.MaxMessageBytes() + out.index_bits;
  return out;
}

int AmplifiedCopies(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw PreconditionError("amplification needs eps in (0, 1)");
  }
  return static_cast<int>(std::ceil(2.0 / eps - 1e-12));
}

int Amplify(const DecisionProcedure& decide, int copies, uint64_t seed,
            int workers) {
  if (copies < 1) throw PreconditionError("amplification needs copies >= 1");
  std::atomic<int> any{0};
  ParallelFor(
      copies,
      [&](int c) {
        if (decide(DeriveSeed(seed, static_cast<uint64_t>(c))) == 1) any = 1;
      },
      workers);
  return any.load();
}

SuccessEstimate WilsonEstimate(int64_t successes, int64_t trials, double z) {
  SuccessEstimate est;
  est.trials = trials;
  est.successes = successes;
  if (trials == 0) {
    est.upper = 1.0;
    return est;
  }
  const double nn = static_cast<double>(trials);
  const double phat = successes / nn;
  const double z2 = z * z;
  const double center = (phat + z2 / (2 * nn)) / (1 + z2 / nn);
  const double half =
      z * std::sqrt(phat * (1 - phat) / nn + z2 / (4 * nn * nn)) /
      (1 + z2 / nn);
  est.rate = phat;
  est.lower = std::max(0.0, center - half);
  est.upper = std::min(1.0, center + half);
  return est;
}

SuccessEstimate EstimateSuccess(const DecisionProcedure& trial, int expected,
                                int64_t trials, uint64_t seed, int workers) {
  std::atomic<int64_t> successes{0};
  ParallelFor(
      static_cast<int>(trials),
      [&](int i) {
        if (trial(DeriveSeed(seed, static_cast<uint64_t>(i))) == expected) {
          ++successes;
        }
      },
      workers);
  return WilsonEstimate(successes.load(), trials);
}

}  // namespace maxcard
