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

#ifndef MAXCARD_INSTANCE_H_
#define MAXCARD_INSTANCE_H_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "maxcard/oracle.h"
#include "maxcard/partition.h"
#include "maxcard/robust.h"

namespace maxcard {

using Json = nlohmann::ordered_json;

struct Instance {
  std::string id;
  int k = 0;  // suggested cardinality; 0 if unset
  Partition partition;
  std::shared_ptr<const SetFunction> function;
};

// Function kinds: "coverage", "fractional_coverage", "multilinear_index",
// "hardness". Throws PreconditionError for other function types.
Json FunctionToJson(const SetFunction& fn);
std::shared_ptr<const SetFunction> FunctionFromJson(const Json& j);

// {instance_id, k, ground_size, blocks, private_sets, function}.
Json InstanceToJson(const Instance& inst);
Instance InstanceFromJson(const Json& j);

// A file holds one instance object or an array of them.
std::vector<Instance> LoadInstances(const std::string& path);
void SaveInstances(const std::string& path,
                   const std::vector<Instance>& instances);

Json SummaryToJson(const RobustSummary& summary);
RobustSummary SummaryFromJson(const Json& j);

// Generator kinds:
//   coverage     random weighted coverage, random two-player split;
//   adversarial  planted optimum split between the players, with decoys;
//   modular      one private point per element;
//   hardness     the hard family with p blocks of n and random hidden set;
//   multilinear  the index gadget instance with random x and t.
struct GeneratorSpec {
  std::string kind = "coverage";
  int count = 1;
  int ground = 12;    // coverage, modular
  int universe = 10;  // coverage
  double density = 0.3;
  int k = 3;
  int p = 3;
  int n = 3;
};

std::vector<std::string> GeneratorKinds();
Instance GenerateInstance(const GeneratorSpec& spec, uint64_t seed,
                          int serial);
// Instance i uses stream i of `seed`; ids are "<kind>-<i>".
std::vector<Instance> GenerateInstances(const GeneratorSpec& spec,
                                        uint64_t seed);

// The mixed desk-scale suite: coverage and adversarial instances, N <= 16,
// k in [1, 4].
std::vector<Instance> DeskSuite(int count, uint64_t seed);

}  // namespace maxcard

#endif  // MAXCARD_INSTANCE_H_
