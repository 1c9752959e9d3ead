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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <vector>

#include "maxcard/coverage.h"
#include "maxcard/hardness.h"
#include "maxcard/instance.h"
#include "maxcard/nlp.h"
#include "maxcard/protocols.h"
#include "maxcard/reductions.h"
#include "maxcard/robust.h"
#include "maxcard/seeding.h"
#include "maxcard/suite.h"

namespace maxcard {
namespace {

// Tolerances and budgets.
constexpr double kIdentityTol = 1e-9;
constexpr double kAgreementTol = 1e-12;
constexpr double kRatioTol = 1e-9;
constexpr double kConversionTol = 1e-9;
constexpr double kNlpTol = 1e-5;
constexpr double kGridStep = 0.001;
constexpr int kSuiteInstances = 500;
constexpr uint64_t kSeed = 20200601;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void Report(int id, const std::string& name, double limit_s,
            const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  if (secs > limit_s) {
    out.pass = false;
    out.detail += " (over time budget)";
  }
  if (!out.pass) ++failures;
  std::printf("%s %d %s: %s [%.2fs / %.0fs]\n", out.pass ? "PASS" : "FAIL",
              id, name.c_str(), out.detail.c_str(), secs, limit_s);
  std::fflush(stdout);
}

std::string Fmt(const char* format, double a) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), format, a);
  return buf;
}

Outcome WeightIdentities() {
  double product = 0.0, sum_rel = 0.0, quad = 0.0;
  int bad = 0;
  for (int p = 1; p <= 1000; ++p) {
    const WeightIdentityReport r = CheckWeightIdentities(MakeWeights(p));
    product = std::max(product, r.max_product_residual);
    sum_rel = std::max(sum_rel, r.max_sum_residual / p);
    quad = std::max(quad, r.max_quadratic_residual);
    if (r.max_product_residual > kIdentityTol ||
        r.max_sum_residual > kIdentityTol * p || !r.ratio_bounds_hold) {
      ++bad;
    }
  }
  return {bad == 0, "p<=1000, max product residual " + Fmt("%.2e", product) +
                        ", max sum residual/p " + Fmt("%.2e", sum_rel) +
                        ", ratio bounds " + (bad == 0 ? "hold" : "fail")};
}

Outcome ValueGap() {
  int checked = 0, bad = 0;
  double worst = -1e9;
  for (int p = 1; p <= 4; ++p) {
    for (int n = 1; n <= 3; ++n) {
      int combos = 1;
      for (int j = 0; j < p; ++j) combos *= n;
      for (int c = 0; c < combos; ++c) {
        std::vector<Element> hidden(p);
        int rest = c;
        for (int j = 0; j < p; ++j) {
          hidden[j] = j * n + rest % n;
          rest /= n;
        }
        const ValueGapReport r = ValueGapCheck(HardnessFn(p, n, hidden), p);
        ++checked;
        worst = std::max(worst, r.max_disjoint_value - r.bound);
        if (!r.passed) ++bad;
      }
    }
  }
  return {bad == 0, std::to_string(checked) +
                        " hidden choices, max (disjoint value - bound) " +
                        Fmt("%.4f", worst)};
}

Outcome Indistinguishability() {
  int64_t comparisons = 0;
  double deviation = 0.0;
  int bad = 0;
  for (int p = 1; p <= 12; ++p) {
    for (int n = 1; p * n <= 12; ++n) {
      for (int ell = 1; ell <= p; ++ell) {
        const IndistinguishabilityReport r = IndistinguishabilityCheck(p, n, ell);
        comparisons += r.comparisons;
        deviation = std::max(deviation, r.max_deviation);
        if (!r.passed || r.max_deviation > kAgreementTol) ++bad;
      }
    }
  }
  return {bad == 0, std::to_string(comparisons) +
                        " comparisons, max deviation " + Fmt("%.2e", deviation)};
}

Outcome DerivativeBounds() {
  const int p_max = 10000;
  std::vector<char> ok(p_max + 1, 1);
  std::vector<double> upper(p_max + 1), lower(p_max + 1);
  ParallelFor(
      p_max,
      [&](int i) {
        const DerivativeBoundsReport r = DerivativeBoundsCheck(i + 1);
        ok[i + 1] = r.passed;
        upper[i + 1] = r.min_upper_slack;
        lower[i + 1] = r.min_lower_slack;
      },
      WorkerCount());
  int bad = 0;
  double min_upper = 1e9, min_lower = 1e9;
  for (int p = 1; p <= p_max; ++p) {
    bad += !ok[p];
    min_upper = std::min(min_upper, upper[p]);
    min_lower = std::min(min_lower, lower[p]);
  }
  return {bad == 0, "all p<=10^4, min upper slack " + Fmt("%.3e", min_upper) +
                        ", min lower slack " + Fmt("%.3e", min_lower)};
}

SuiteResult suite_result;

Outcome RatioFloors() {
  SuiteConfig config;
  config.protocols = {"p1", "p1g", "p3", "half"};
  config.eps = 0.1;
  config.workers = WorkerCount();
  suite_result = RunSuite(DeskSuite(kSuiteInstances, kSeed), config);
  std::map<std::string, double> min_ratio;
  for (const SuiteRow& row : suite_result.rows) {
    auto it = min_ratio.find(row.protocol);
    if (it == min_ratio.end() || row.ratio < it->second) {
      min_ratio[row.protocol] = row.ratio;
    }
  }
  const std::map<std::string, double> floors{
      {"p1", 2.0 / 3.0}, {"p1g", 2.0 / 3.0 - 0.1}, {"p3", 0.514}, {"half", 0.5}};
  bool pass = suite_result.rows.size() == 4u * kSuiteInstances;
  std::string detail = std::to_string(kSuiteInstances) + " instances;";
  for (const auto& [name, floor] : floors) {
    const double r = min_ratio.count(name) ? min_ratio[name] : 0.0;
    pass = pass && r >= floor - kRatioTol;
    detail += " " + name + " min " + Fmt("%.4f", r) + " (floor " +
              Fmt("%.4f", floor) + ")";
  }
  int other = 0;
  for (const std::string& f : suite_result.failures) {
    if (f.find("bound violated") == std::string::npos) {
      ++other;
      std::fprintf(stderr, "suite: %s\n", f.c_str());
    }
  }
  pass = pass && other == 0;
  detail += "; " + std::to_string(other) + " other invariant failures";
  return {pass, detail};
}

Outcome AuditBounds() {
  int audited = 0, bad = 0;
  for (const SuiteRow& row : suite_result.rows) {
    if (!row.audited) continue;
    ++audited;
    if (!row.audit_ok) ++bad;
  }
  return {audited == kSuiteInstances && bad == 0,
          std::to_string(audited) + " runs audited, " + std::to_string(bad) +
              " with a violated prefix, X or Y bound"};
}

Outcome NlpCertificate() {
  const NlpSolution sol = SolveNlp(kGridStep, 1e-6, WorkerCount());
  const RatioBoundPoint& pt = sol.closed_form;
  const bool pass = std::abs(pt.x - 0.7175647) <= kNlpTol &&
                    std::abs(pt.y - 0.6797341) <= kNlpTol && pt.z >= 0.514 &&
                    pt.z < 0.515 && sol.grid.below_threshold == 0 &&
                    sol.spurious_root_rejected;
  return {pass, "x*=" + Fmt("%.7f", pt.x) + " y*=" + Fmt("%.7f", pt.y) +
                    " z*=" + Fmt("%.7f", pt.z) + ", grid min " +
                    Fmt("%.7f", sol.grid.min.z) + ", " +
                    std::to_string(sol.grid.below_threshold) +
                    " grid points below 0.514"};
}

Outcome OneSided() {
  std::atomic<int64_t> runs{0}, wrong{0};
  std::vector<std::function<void()>> jobs;
  const std::vector<std::string> two = {"p1", "p1g", "p3", "half", "sieve",
                                        "forward"};
  for (int n = 1; n <= 4; ++n) {
    for (int k = 2; k <= 5; ++k) {
      for (const std::string& inner : two) {
        jobs.push_back([&, n, k, inner] {
          const ProtocolSpec spec = MakeProtocol(inner, k, 0.1);
          for (int t = 0; t < n; ++t) {
            for (int mask = 0; mask < (1 << n); ++mask) {
              if (mask >> t & 1) continue;
              IndexInstance inst;
              inst.t = t;
              for (int j = 0; j < n; ++j) inst.x.push_back(mask >> j & 1);
              ++runs;
              if (ReduceIndexToMaxCard(inst, k, spec).decision != 0) ++wrong;
            }
          }
        });
      }
    }
  }
  const std::vector<std::string> chain = {"greedy", "forward", "sieve", "p3",
                                          "p1"};
  for (int p = 2; p <= 4; ++p) {
    for (int n = 1; n <= 4; ++n) {
      for (const std::string& inner : chain) {
        jobs.push_back([&, p, n, inner] {
          const ProtocolSpec spec = MakeProtocol(inner, p, 0.1);
          for (int s = 0; s < 25; ++s) {
            const ChainInstance inst =
                SampleChain(p, n, 0, DeriveSeed(kSeed, p * 1000 + n * 10 + s));
            ++runs;
            if (ReduceChainToMaxCard(inst, spec).decision != 0) ++wrong;
          }
        });
      }
    }
  }
  ParallelFor(static_cast<int>(jobs.size()), [&](int i) { jobs[i](); },
              WorkerCount());
  return {wrong == 0, std::to_string(runs.load()) + " 0-case runs, " +
                          std::to_string(wrong.load()) + " decided 1"};
}

Outcome Robust() {
  std::atomic<int> trials{0}, disjoint_bad{0}, feasible_bad{0}, ratio_bad{0},
      size_bad{0};
  std::mutex mu;
  double min_ratio = 1e9;
  ParallelFor(
      50,
      [&](int i) {
        std::mt19937_64 rng = MakeRng(kSeed, 5000 + i);
        GeneratorSpec gen;
        gen.kind = i % 2 == 0 ? "coverage" : "adversarial";
        gen.ground = std::uniform_int_distribution<int>(8, 12)(rng);
        gen.k = std::uniform_int_distribution<int>(1, 3)(rng);
        const Instance inst = GenerateInstance(gen, kSeed + 1, i);
        for (const char* protocol : {"p1", "p3"}) {
          for (AdversaryKind kind :
               {AdversaryKind::kRandom, AdversaryKind::kGreedyDamage}) {
            for (int d = 0; d <= 3; ++d) {
              const RobustTrial t = RunRobustTrial(
                  inst, protocol, gen.k, 0.1, d, kind,
                  DeriveSeed(kSeed, 100000 + 100 * i + d));
              ++trials;
              disjoint_bad += !t.disjoint;
              feasible_bad += !t.feasible;
              size_bad += !t.size_ok;
              ratio_bad += !t.ratio_ok;
              std::lock_guard<std::mutex> lock(mu);
              min_ratio = std::min(min_ratio, t.ratio);
            }
          }
        }
      },
      WorkerCount());
  const bool pass = disjoint_bad == 0 && feasible_bad == 0 && ratio_bad == 0 &&
                    size_bad == 0;
  return {pass, std::to_string(trials.load()) + " trials (50 instances, p1/p3, " +
                    "random/greedy-damage, d<=3); disjointness failures " +
                    std::to_string(disjoint_bad.load()) + ", infeasible " +
                    std::to_string(feasible_bad.load()) + ", size " +
                    std::to_string(size_bad.load()) + ", ratio " +
                    std::to_string(ratio_bad.load()) + ", min ratio " +
                    Fmt("%.4f", min_ratio)};
}

Outcome Conversion() {
  std::mt19937_64 rng = MakeRng(kSeed, 9);
  std::uniform_int_distribution<int> size(1, 8);
  std::uniform_int_distribution<int> points(1, 6);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  int64_t subsets = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const int n = trial == 0 ? 8 : size(rng);
    const int m = points(rng);
    std::vector<double> weights(m);
    for (double& w : weights) w = 0.1 + 2.0 * unit(rng);
    std::vector<std::vector<double>> prob(n, std::vector<double>(m));
    for (auto& row : prob) {
      for (double& p : row) {
        const double r = unit(rng);
        p = r < 0.25 ? 0.0 : (r > 0.9 ? 1.0 : unit(rng));
      }
    }
    const FractionalCoverageFn f(weights, prob);
    const WeightedCoverageFn g = FractionalToWeighted(f);
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
      ElementSet s;
      for (int v = 0; v < n; ++v) {
        if (mask >> v & 1u) s.push_back(v);
      }
      worst = std::max(worst, std::abs(f.Evaluate(s) - g.Evaluate(s)));
      ++subsets;
    }
  }
  return {worst <= kConversionTol, "20 instances, " + std::to_string(subsets) +
                                       " subsets, max deviation " +
                                       Fmt("%.2e", worst)};
}

}  // namespace
}  // namespace maxcard

int main() {
  using namespace maxcard;
  Report(1, "hardness weight identities", 5, WeightIdentities);
  Report(2, "value gap", 60, ValueGap);
  Report(3, "indistinguishability", 60, Indistinguishability);
  Report(4, "derivative bounds", 10, DerivativeBounds);
  Report(5, "protocol ratio floors", 300, RatioFloors);
  Report(6, "per-run efficient protocol bounds", 300, AuditBounds);
  Report(7, "ratio bound certification", 30, NlpCertificate);
  Report(8, "reduction one-sidedness", 120, OneSided);
  Report(9, "robust wrapper", 300, Robust);
  Report(10, "fractional to weighted conversion", 30, Conversion);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
