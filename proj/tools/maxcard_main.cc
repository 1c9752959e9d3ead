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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "maxcard/errors.h"
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

constexpr int kUsageError = 2;

struct GenOptions {
  GeneratorSpec spec;
  uint64_t seed = 1;
  int desk = 0;
  std::string out;
};

struct RunOptions {
  std::vector<std::string> protocols;
  std::string instance;
  std::string config;
  std::string report;
  int desk = 0;
  uint64_t seed = 1;
  int k = 0;
  double eps = 0.1;
  std::optional<double> ratio_floor;
  bool no_audit = false;
};

struct ReduceOptions {
  std::string problem = "index";
  std::string inner = "p1";
  int which_case = 0;
  int n = 3;
  int k = 3;
  int p = 3;
  int trials = 100;
  uint64_t seed = 1;
  double amplify_eps = 0.0;
};

struct RobustOptions {
  std::string protocol = "p3";
  int d = 1;
  std::string adversary = "random";
  int trials = 10;
  int k = 3;
  int ground = 12;
  double eps = 0.1;
  uint64_t seed = 1;
  std::string summary_out;
};

struct NlpOptions {
  double grid = 0.001;
  double tol = 1e-6;
};

struct HardnessOptions {
  int p_max = 1000;
  int derivative_p = 10000;
  std::string weights_csv;
};

std::vector<std::string> SplitList(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const std::string& item : items) {
    size_t start = 0;
    while (start <= item.size()) {
      const size_t comma = item.find(',', start);
      const std::string part = item.substr(
          start, comma == std::string::npos ? std::string::npos
                                            : comma - start);
      if (!part.empty()) out.push_back(part);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return out;
}

int Gen(const GenOptions& opt) {
  std::vector<Instance> instances =
      opt.desk > 0 ? DeskSuite(opt.desk, opt.seed)
                   : GenerateInstances(opt.spec, opt.seed);
  if (opt.out.empty()) {
    Json j = Json::array();
    for (const Instance& inst : instances) j.push_back(InstanceToJson(inst));
    std::cout << j.dump(2) << "\n";
  } else {
    SaveInstances(opt.out, instances);
    std::printf("wrote %zu instances to %s\n", instances.size(),
                opt.out.c_str());
  }
  return 0;
}

int Run(RunOptions opt, const CLI::App& cmd) {
  if (!opt.config.empty()) {
    std::ifstream in(opt.config);
    if (!in) throw PreconditionError("cannot open " + opt.config);
    const Json cfg = Json::parse(in);
    auto unset = [&](const char* flag) { return cmd.count(flag) == 0; };
    if (unset("--protocol") && cfg.contains("protocols")) {
      opt.protocols = cfg["protocols"].get<std::vector<std::string>>();
    }
    if (unset("--instance") && cfg.contains("instance")) {
      opt.instance = cfg["instance"].get<std::string>();
    }
    if (unset("--report") && cfg.contains("report")) {
      opt.report = cfg["report"].get<std::string>();
    }
    if (unset("--desk") && cfg.contains("desk")) opt.desk = cfg["desk"];
    if (unset("--seed") && cfg.contains("seed")) opt.seed = cfg["seed"];
    if (unset("--k") && cfg.contains("k")) opt.k = cfg["k"];
    if (unset("--eps") && cfg.contains("eps")) opt.eps = cfg["eps"];
    if (unset("--ratio-floor") && cfg.contains("ratio_floor")) {
      opt.ratio_floor = cfg["ratio_floor"].get<double>();
    }
  }
  opt.protocols = SplitList(opt.protocols);
  if (opt.protocols.empty()) {
    std::fprintf(stderr, "run: no protocols given\n");
    return kUsageError;
  }
  if (opt.instance.empty() == (opt.desk == 0)) {
    std::fprintf(stderr, "run: give exactly one of --instance, --desk\n");
    return kUsageError;
  }
  const std::vector<Instance> instances =
      opt.desk > 0 ? DeskSuite(opt.desk, opt.seed)
                   : LoadInstances(opt.instance);
  SuiteConfig config;
  config.protocols = opt.protocols;
  config.k = opt.k;
  config.eps = opt.eps;
  config.ratio_floor = opt.ratio_floor;
  config.audit = !opt.no_audit;
  config.workers = WorkerCount();
  const SuiteResult result = RunSuite(instances, config);
  if (opt.report.empty()) {
    WriteCsv(std::cout, result.rows);
  } else {
    std::ofstream out(opt.report);
    if (!out) throw PreconditionError("cannot write " + opt.report);
    WriteCsv(out, result.rows);
  }
  for (const std::string& f : result.failures) {
    std::fprintf(stderr, "FAIL %s\n", f.c_str());
  }
  std::fprintf(stderr, "%zu rows, %zu failures\n", result.rows.size(),
               result.failures.size());
  return result.passed() ? 0 : 1;
}

int Reduce(const ReduceOptions& opt) {
  const bool chain = opt.problem == "chain";
  if (!chain && opt.problem != "index") {
    throw PreconditionError("unknown problem: " + opt.problem);
  }
  const int k = chain ? opt.p : opt.k;
  const int p = chain ? opt.p : 2;
  const ProtocolSpec inner = MakeProtocol(opt.inner, k, 0.1);
  auto once = [&](uint64_t seed) {
    const ChainInstance inst = SampleChain(p, opt.n, opt.which_case, seed);
    return chain ? ReduceChainToMaxCard(inst, inner).decision
                 : ReduceIndexToMaxCard(inst.AsIndex(), k, inner).decision;
  };
  DecisionProcedure trial = once;
  int copies = 1;
  if (opt.amplify_eps > 0.0) {
    copies = AmplifiedCopies(opt.amplify_eps);
    // Amplified copies all see the same input; only the instance is drawn
    // per trial.
    trial = [&, copies](uint64_t seed) {
      const ChainInstance inst = SampleChain(p, opt.n, opt.which_case, seed);
      return Amplify(
          [&](uint64_t) {
            return chain
                       ? ReduceChainToMaxCard(inst, inner).decision
                       : ReduceIndexToMaxCard(inst.AsIndex(), k, inner)
                             .decision;
          },
          copies, seed, 1);
    };
  }
  const SuccessEstimate est = EstimateSuccess(
      trial, opt.which_case, opt.trials, opt.seed, WorkerCount());
  const ChainInstance probe = SampleChain(p, opt.n, opt.which_case, opt.seed);
  const ReductionOutcome sample =
      chain ? ReduceChainToMaxCard(probe, inner)
            : ReduceIndexToMaxCard(probe.AsIndex(), k, inner);
  std::printf("problem=%s inner=%s case=%d n=%d k=%d copies=%d\n",
              opt.problem.c_str(), opt.inner.c_str(), opt.which_case, opt.n,
              k, copies);
  std::printf("ground_size=%d threshold=%.12g max_message_bits=%lld\n",
              sample.ground_size, sample.threshold,
              static_cast<long long>(sample.max_message_bits));
  std::printf("success=%lld/%lld rate=%.6f ci=[%.6f, %.6f]\n",
              static_cast<long long>(est.successes),
              static_cast<long long>(est.trials), est.rate, est.lower,
              est.upper);
  if (opt.which_case == 0 && est.successes != est.trials) {
    std::printf("FAIL one-sidedness: a 0-case input was decided 1\n");
    return 1;
  }
  return 0;
}

int Robust(const RobustOptions& opt) {
  const std::string kind =
      opt.adversary == "greedy" ? "greedy-damage" : opt.adversary;
  const AdversaryKind adversary = ParseAdversary(kind);
  GeneratorSpec gen;
  gen.kind = "coverage";
  gen.ground = opt.ground;
  gen.k = opt.k;
  int failures = 0;
  for (int t = 0; t < opt.trials; ++t) {
    const Instance inst = GenerateInstance(gen, opt.seed, t);
    const RobustTrial trial = RunRobustTrial(
        inst, opt.protocol, opt.k, opt.eps, opt.d, adversary,
        DeriveSeed(opt.seed, 1000003 + t));
    std::printf(
        "%s deleted=%s copy=%d stored=%lld value=%.9g opt=%.9g ratio=%.6f "
        "%s\n",
        inst.id.c_str(), ToString(trial.deleted).c_str(), trial.copy,
        static_cast<long long>(trial.stored_elements), trial.value,
        trial.opt_after, trial.ratio, trial.passed() ? "ok" : "FAIL");
    if (!trial.passed()) ++failures;
    if (t == 0 && !opt.summary_out.empty()) {
      const ProtocolSpec spec = MakeProtocol(opt.protocol, opt.k, opt.eps);
      const ValueOracle oracle(inst.function);
      const RobustSummary summary = BuildSummary(
          oracle, Range(inst.partition.ground_size()), opt.k, opt.d, spec);
      std::ofstream out(opt.summary_out);
      out << SummaryToJson(summary).dump(2) << "\n";
    }
  }
  std::printf("%d trials, %d failures\n", opt.trials, failures);
  return failures == 0 ? 0 : 1;
}

int VerifyNlp(const NlpOptions& opt) {
  const NlpSolution sol = SolveNlp(opt.grid, opt.tol, WorkerCount());
  std::printf("x* = %.10f\ny* = %.10f\nz* = %.10f\n", sol.closed_form.x,
              sol.closed_form.y, sol.closed_form.z);
  std::printf("numeric (x, y, z) = (%.10f, %.10f, %.10f)\n", sol.numeric.x,
              sol.numeric.y, sol.numeric.z);
  std::printf("grid step %g: %lld points, min %.10f at (%.4f, %.4f)\n",
              opt.grid, static_cast<long long>(sol.grid.points),
              sol.grid.min.z, sol.grid.min.x, sol.grid.min.y);
  const bool x_ok = std::abs(sol.closed_form.x - 0.7175647) <= 1e-5;
  const bool y_ok = std::abs(sol.closed_form.y - 0.6797341) <= 1e-5;
  const bool z_ok = sol.closed_form.z >= 0.514 && sol.closed_form.z < 0.515;
  const bool grid_ok = sol.grid.below_threshold == 0;
  std::printf("%s x* within 1e-5 of 0.7175647\n", x_ok ? "PASS" : "FAIL");
  std::printf("%s y* within 1e-5 of 0.6797341\n", y_ok ? "PASS" : "FAIL");
  std::printf("%s z* in [0.514, 0.515)\n", z_ok ? "PASS" : "FAIL");
  std::printf("%s no grid point below 0.514\n", grid_ok ? "PASS" : "FAIL");
  std::printf("%s spurious root %.10f rejected\n",
              sol.spurious_root_rejected ? "PASS" : "FAIL",
              sol.spurious_root);
  return x_ok && y_ok && z_ok && grid_ok && sol.spurious_root_rejected ? 0
                                                                       : 1;
}

int VerifyHardness(const HardnessOptions& opt) {
  std::ofstream csv;
  if (!opt.weights_csv.empty()) {
    csv.open(opt.weights_csv);
    if (!csv) throw PreconditionError("cannot write " + opt.weights_csv);
    csv << "p,j,delta,a,suffix,ratio\n";
    csv.precision(17);
  }
  bool ok = true;
  double worst_product = 0.0;
  for (int p = 1; p <= opt.p_max; ++p) {
    const HardnessWeights w = MakeWeights(p);
    const WeightIdentityReport r = CheckWeightIdentities(w);
    worst_product = std::max(worst_product, r.max_product_residual);
    if (!r.passed) {
      std::printf("FAIL weight identities at p=%d\n", p);
      ok = false;
    }
    if (csv.is_open()) {
      for (int j = 1; j <= p; ++j) {
        csv << p << "," << j << "," << w.delta[j - 1] << "," << w.a[j - 1]
            << "," << w.suffix[j - 1] << "," << w.Ratio(j) << "\n";
      }
    }
  }
  std::printf("%s weight identities for p <= %d (max product residual %.3g)\n",
              ok ? "PASS" : "FAIL", opt.p_max, worst_product);
  const DerivativeBoundsReport d = DerivativeBoundsCheck(opt.derivative_p);
  std::printf("%s derivative bounds for p = %d (min slacks %.3g, %.3g)\n",
              d.passed ? "PASS" : "FAIL", opt.derivative_p, d.min_upper_slack,
              d.min_lower_slack);
  return ok && d.passed ? 0 : 1;
}

}  // namespace
}  // namespace maxcard

int main(int argc, char** argv) {
  using namespace maxcard;
  CLI::App app{"Cardinality-constrained submodular maximization protocols"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate instances as JSON");
  gen_cmd->add_option("--kind", gen.spec.kind)
      ->check(CLI::IsMember(GeneratorKinds()));
  gen_cmd->add_option("--count", gen.spec.count);
  gen_cmd->add_option("--ground", gen.spec.ground);
  gen_cmd->add_option("--universe", gen.spec.universe);
  gen_cmd->add_option("--density", gen.spec.density);
  gen_cmd->add_option("--k", gen.spec.k);
  gen_cmd->add_option("--p", gen.spec.p);
  gen_cmd->add_option("--n", gen.spec.n);
  gen_cmd->add_option("--desk", gen.desk, "Emit the mixed desk suite");
  gen_cmd->add_option("--seed", gen.seed)->required();
  gen_cmd->add_option("--out", gen.out);

  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "Run protocols on instances");
  run_cmd->add_option("--protocol", run.protocols,
                      "p1, p1g, p3, half, sieve (repeatable)");
  run_cmd->add_option("--instance", run.instance);
  run_cmd->add_option("--desk", run.desk);
  run_cmd->add_option("--seed", run.seed);
  run_cmd->add_option("--config", run.config);
  run_cmd->add_option("--k", run.k);
  run_cmd->add_option("--eps", run.eps);
  run_cmd->add_option("--report", run.report);
  run_cmd->add_option("--ratio-floor", run.ratio_floor);
  run_cmd->add_flag("--no-audit", run.no_audit);

  ReduceOptions red;
  auto* red_cmd = app.add_subcommand("reduce", "Simulate a reduction");
  red_cmd->add_option("--problem", red.problem)
      ->check(CLI::IsMember({"index", "chain"}));
  red_cmd->add_option("--inner", red.inner);
  red_cmd->add_option("--case", red.which_case)->check(CLI::Range(0, 1));
  red_cmd->add_option("--n", red.n);
  red_cmd->add_option("--k", red.k);
  red_cmd->add_option("--p", red.p);
  red_cmd->add_option("--trials", red.trials);
  red_cmd->add_option("--seed", red.seed);
  red_cmd->add_option("--amplify-eps", red.amplify_eps);

  RobustOptions rob;
  auto* rob_cmd = app.add_subcommand("robust", "Deletion-robust summaries");
  rob_cmd->add_option("--protocol", rob.protocol);
  rob_cmd->add_option("--d", rob.d);
  rob_cmd->add_option("--adversary", rob.adversary)
      ->check(CLI::IsMember({"random", "greedy", "greedy-damage"}));
  rob_cmd->add_option("--trials", rob.trials);
  rob_cmd->add_option("--k", rob.k);
  rob_cmd->add_option("--ground", rob.ground);
  rob_cmd->add_option("--eps", rob.eps);
  rob_cmd->add_option("--seed", rob.seed);
  rob_cmd->add_option("--summary-out", rob.summary_out);

  NlpOptions nlp;
  auto* nlp_cmd = app.add_subcommand("verify-nlp", "Certify the ratio bound");
  nlp_cmd->add_option("--grid", nlp.grid);
  nlp_cmd->add_option("--tol", nlp.tol);

  HardnessOptions hard;
  auto* hard_cmd =
      app.add_subcommand("verify-hardness", "Check the hard-family weights");
  hard_cmd->add_option("--p-max", hard.p_max);
  hard_cmd->add_option("--derivative-p", hard.derivative_p);
  hard_cmd->add_option("--weights-csv", hard.weights_csv);

  CLI11_PARSE(app, argc, argv);
  try {
    if (*gen_cmd) return Gen(gen);
    if (*run_cmd) return Run(run, *run_cmd);
    if (*red_cmd) return Reduce(red);
    if (*rob_cmd) return Robust(rob);
    if (*nlp_cmd) return VerifyNlp(nlp);
    if (*hard_cmd) return VerifyHardness(hard);
  } catch (const PreconditionError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsageError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return kUsageError;
}
