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

#ifndef MAXCARD_SEEDING_H_
#define MAXCARD_SEEDING_H_

#include <cstdint>
#include <functional>
#include <random>

namespace maxcard {

// SplitMix64 finalizer.
uint64_t SplitMix64(uint64_t x);

// Seed of stream `stream` under `base`; independent of evaluation order.
uint64_t DeriveSeed(uint64_t base, uint64_t stream);

std::mt19937_64 MakeRng(uint64_t base, uint64_t stream);

// MAXCARD_WORKERS if set to a positive integer, else the hardware
// concurrency (at least 1).
int WorkerCount();

// Runs body(0..n-1) on up to `workers` threads. The first exception thrown
// by any call is rethrown after all threads finish.
void ParallelFor(int n, const std::function<void(int)>& body, int workers);

}  // namespace maxcard

#endif  // MAXCARD_SEEDING_H_
