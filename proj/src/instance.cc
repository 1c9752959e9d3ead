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

#include "maxcard/instance.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <utility>

#include "maxcard/bytes.h"
#include "maxcard/coverage.h"
#include "maxcard/errors.h"
#include "maxcard/hardness.h"
#include "maxcard/multilinear.h"
#include "maxcard/seeding.h"

namespace maxcard {
namespace {

Json SetsToJson(const std::vector<ElementSet>& sets) {
  Json out = Json::array();
  for (const ElementSet& s : sets) out.push_back(s);
  return out;
}

std::vector<ElementSet> SetsFromJson(const Json& j) {
  std::vector<ElementSet> out;
  for (const Json& s : j) out.push_back(Normalize(s.get<ElementSet>()));
  return out;
}

Partition RandomSplit(int ground, double keep, std::mt19937_64& rng) {
  std::bernoulli_distribution side(0.5);
  std::bernoulli_distribution held(keep);
  ElementSet alice_block;
  ElementSet alice;
  ElementSet bob;
  for (int e = 0; e < ground; ++e) {
    const bool is_alice = side(rng);
    if (is_alice) alice_block.push_back(e);
    if (held(rng)) (is_alice ? alice : bob).push_back(e);
  }
  return Partition::TwoPlayer(ground, alice_block, alice, bob);
}

Instance RandomCoverage(const std::string& id, int ground, int universe,
                        double density, int k, std::mt19937_64& rng) {
  if (ground < 1 || universe < 1) {
    throw PreconditionError("coverage needs ground, universe >= 1");
  }
  std::uniform_real_distribution<double> weight(0.5, 2.0);
  std::bernoulli_distribution covers(density);
  std::uniform_int_distribution<int> any_point(0, universe - 1);
  std::vector<double> weights(universe);
  for (double& w : weights) w = weight(rng);
  std::vector<std::vector<int>> sets(ground);
  for (auto& s : sets) {
    for (int u = 0; u < universe; ++u) {
      if (covers(rng)) s.push_back(u);
    }
    if (s.empty()) s.push_back(any_point(rng));
  }
  Partition partition = RandomSplit(ground, 0.85, rng);
  return Instance{id, k, std::move(partition),
                  std::make_shared<WeightedCoverageFn>(weights, sets)};
}

// Each player holds half of a planted optimum of unit points, plus decoys
// that re-cover the planted points of their own side and a light noise point.
Instance AdversarialSplit(const std::string& id, int ground, int k,
                          std::mt19937_64& rng) {
  if (k < 1 || ground < k) {
    throw PreconditionError("adversarial split needs 1 <= k <= ground");
  }
  const int ka = (k + 1) / 2;
  const int noise_points = 3;
  std::vector<double> weights(k, 1.0);
  std::uniform_real_distribution<double> light(0.01, 0.1);
  for (int i = 0; i < noise_points; ++i) weights.push_back(light(rng));
  std::vector<std::vector<int>> sets;
  std::vector<int> owner;
  for (int i = 0; i < k; ++i) {
    sets.push_back({i});
    owner.push_back(i < ka ? 0 : 1);
  }
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<int> noise(k, k + noise_points - 1);
  for (int e = k; e < ground; ++e) {
    int side = coin(rng) ? 0 : 1;
    if (side == 1 && ka == k) side = 0;
    const int lo = side == 0 ? 0 : ka;
    const int hi = side == 0 ? ka - 1 : k - 1;
    std::uniform_int_distribution<int> point(lo, hi);
    std::vector<int> s{point(rng), point(rng), noise(rng)};
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    sets.push_back(std::move(s));
    owner.push_back(side);
  }
  std::vector<int> perm(ground);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::vector<int>> placed(ground);
  ElementSet alice;
  ElementSet bob;
  for (int e = 0; e < ground; ++e) {
    placed[perm[e]] = sets[e];
    (owner[e] == 0 ? alice : bob).push_back(perm[e]);
  }
  alice = Normalize(std::move(alice));
  bob = Normalize(std::move(bob));
  Partition partition = Partition::TwoPlayer(ground, alice, alice, bob);
  return Instance{id, k, std::move(partition),
                  std::make_shared<WeightedCoverageFn>(weights, placed)};
}

Instance SymmetricModular(const std::string& id, int ground, int k,
                          std::mt19937_64& rng) {
  std::vector<double> weights(ground, 1.0);
  std::vector<std::vector<int>> sets(ground);
  for (int e = 0; e < ground; ++e) sets[e] = {e};
  Partition partition = RandomSplit(ground, 1.0, rng);
  return Instance{id, k, std::move(partition),
                  std::make_shared<WeightedCoverageFn>(weights, sets)};
}

Instance HardFamily(const std::string& id, int p, int n,
                    std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<Element> hidden(p);
  for (int j = 0; j < p; ++j) hidden[j] = j * n + pick(rng);
  auto fn = std::make_shared<HardnessFn>(p, n, hidden);
  return Instance{id, p, fn->FullPartition(), fn};
}

Instance IndexGadget(const std::string& id, int n, int k,
                     std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::bernoulli_distribution bit(0.5);
  auto fn = std::make_shared<MultilinearHardnessFn>(n, k, pick(rng));
  ElementSet v_a;
  for (int j = 0; j < n; ++j) {
    if (bit(rng)) v_a = SetUnion(v_a, fn->UGroup(j));
  }
  Partition partition =
      Partition::TwoPlayer(fn->ground_size(), fn->UBlock(), v_a, {fn->w()});
  return Instance{id, k, std::move(partition), fn};
}

}  // namespace

Json FunctionToJson(const SetFunction& fn) {
  Json j;
  if (auto* c = dynamic_cast<const WeightedCoverageFn*>(&fn)) {
    j["kind"] = "coverage";
    j["weights"] = c->weights();
    j["sets"] = c->element_sets();
  } else if (auto* f = dynamic_cast<const FractionalCoverageFn*>(&fn)) {
    j["kind"] = "fractional_coverage";
    j["weights"] = f->weights();
    j["cover_prob"] = f->cover_prob();
  } else if (auto* m = dynamic_cast<const MultilinearHardnessFn*>(&fn)) {
    j["kind"] = "multilinear_index";
    j["n"] = m->n();
    j["k"] = m->k();
    j["index"] = m->index();
  } else if (auto* h = dynamic_cast<const HardnessFn*>(&fn)) {
    j["kind"] = "hardness";
    j["p"] = h->p();
    j["n"] = h->n();
    j["hidden"] = h->hidden();
  } else {
    throw PreconditionError("function type has no JSON form");
  }
  return j;
}

std::shared_ptr<const SetFunction> FunctionFromJson(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "coverage") {
    return std::make_shared<WeightedCoverageFn>(
        j.at("weights").get<std::vector<double>>(),
        j.at("sets").get<std::vector<std::vector<int>>>());
  }
  if (kind == "fractional_coverage") {
    return std::make_shared<FractionalCoverageFn>(
        j.at("weights").get<std::vector<double>>(),
        j.at("cover_prob").get<std::vector<std::vector<double>>>());
  }
  if (kind == "multilinear_index") {
    return std::make_shared<MultilinearHardnessFn>(
        j.at("n").get<int>(), j.at("k").get<int>(), j.at("index").get<int>());
  }
  if (kind == "hardness") {
    return std::make_shared<HardnessFn>(
        j.at("p").get<int>(), j.at("n").get<int>(),
        j.at("hidden").get<std::vector<Element>>());
  }
  throw PreconditionError("unknown function kind: " + kind);
}

Json InstanceToJson(const Instance& inst) {
  Json j;
  j["instance_id"] = inst.id;
  j["k"] = inst.k;
  j["ground_size"] = inst.partition.ground_size();
  j["blocks"] = SetsToJson(inst.partition.blocks());
  j["private_sets"] = SetsToJson(inst.partition.private_sets());
  j["function"] = FunctionToJson(*inst.function);
  return j;
}

Instance InstanceFromJson(const Json& j) {
  const int ground = j.at("ground_size").get<int>();
  Partition partition(ground, SetsFromJson(j.at("blocks")),
                      SetsFromJson(j.at("private_sets")));
  std::shared_ptr<const SetFunction> fn = FunctionFromJson(j.at("function"));
  if (fn->ground_size() != ground) {
    throw PreconditionError("function and partition ground sizes differ");
  }
  return Instance{j.value("instance_id", std::string("instance")),
                  j.value("k", 0), std::move(partition), std::move(fn)};
}

std::vector<Instance> LoadInstances(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw PreconditionError(path + ": " + e.what());
  }
  std::vector<Instance> out;
  try {
    if (j.is_array()) {
      for (const Json& item : j) out.push_back(InstanceFromJson(item));
    } else {
      out.push_back(InstanceFromJson(j));
    }
  } catch (const Json::exception& e) {
    throw PreconditionError(path + ": " + e.what());
  }
  return out;
}

void SaveInstances(const std::string& path,
                   const std::vector<Instance>& instances) {
  Json j = Json::array();
  for (const Instance& inst : instances) j.push_back(InstanceToJson(inst));
  std::ofstream out(path);
  if (!out) throw PreconditionError("cannot write " + path);
  out << (instances.size() == 1 ? j[0] : j).dump(2) << "\n";
}

Json SummaryToJson(const RobustSummary& summary) {
  Json j;
  j["protocol"] = summary.protocol;
  j["d"] = summary.d;
  j["k"] = summary.k;
  j["ground"] = summary.ground;
  Json messages = Json::array();
  for (const Message& m : summary.messages) {
    Json item;
    item["elements"] = m.elements;
    item["aux"] = HexEncode(m.aux);
    messages.push_back(std::move(item));
  }
  j["messages"] = std::move(messages);
  return j;
}

RobustSummary SummaryFromJson(const Json& j) {
  RobustSummary summary;
  summary.protocol = j.at("protocol").get<std::string>();
  summary.d = j.at("d").get<int>();
  summary.k = j.at("k").get<int>();
  summary.ground = Normalize(j.at("ground").get<ElementSet>());
  for (const Json& item : j.at("messages")) {
    Message m;
    m.elements = item.at("elements").get<std::vector<Element>>();
    m.aux = HexDecode(item.at("aux").get<std::string>());
    summary.sets.push_back(m.Distinct());
    summary.messages.push_back(std::move(m));
  }
  if (static_cast<int>(summary.messages.size()) != summary.d + 1) {
    throw PreconditionError("summary needs d+1 messages");
  }
  return summary;
}

std::vector<std::string> GeneratorKinds() {
  return {"coverage", "adversarial", "modular", "hardness", "multilinear"};
}

Instance GenerateInstance(const GeneratorSpec& spec, uint64_t seed,
                          int serial) {
  std::mt19937_64 rng = MakeRng(seed, static_cast<uint64_t>(serial));
  const std::string id = spec.kind + "-" + std::to_string(serial);
  if (spec.kind == "coverage") {
    return RandomCoverage(id, spec.ground, spec.universe, spec.density, spec.k,
                          rng);
  }
  if (spec.kind == "adversarial") {
    return AdversarialSplit(id, spec.ground, spec.k, rng);
  }
  if (spec.kind == "modular") {
    return SymmetricModular(id, spec.ground, spec.k, rng);
  }
  if (spec.kind == "hardness") return HardFamily(id, spec.p, spec.n, rng);
  if (spec.kind == "multilinear") {
    return IndexGadget(id, spec.n, spec.k, rng);
  }
  throw PreconditionError("unknown generator kind: " + spec.kind);
}

std::vector<Instance> GenerateInstances(const GeneratorSpec& spec,
                                        uint64_t seed) {
  if (spec.count < 0) throw PreconditionError("count must be >= 0");
  std::vector<Instance> out;
  for (int i = 0; i < spec.count; ++i) {
    out.push_back(GenerateInstance(spec, seed, i));
  }
  return out;
}

std::vector<Instance> DeskSuite(int count, uint64_t seed) {
  std::vector<Instance> out;
  for (int i = 0; i < count; ++i) {
    std::mt19937_64 rng = MakeRng(seed, static_cast<uint64_t>(i));
    const int ground = std::uniform_int_distribution<int>(6, 16)(rng);
    const int k = std::uniform_int_distribution<int>(1, 4)(rng);
    const std::string suffix = "-" + std::to_string(i);
    if (i % 2 == 0) {
      const int universe = std::uniform_int_distribution<int>(4, 12)(rng);
      const double density =
          std::uniform_real_distribution<double>(0.15, 0.5)(rng);
      out.push_back(
          RandomCoverage("desk-coverage" + suffix, ground, universe, density,
                         k, rng));
    } else {
      out.push_back(AdversarialSplit("desk-adversarial" + suffix, ground, k,
                                     rng));
    }
  }
  return out;
}

}  // namespace maxcard
