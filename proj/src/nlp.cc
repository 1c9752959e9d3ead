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

#include "maxcard/nlp.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "maxcard/errors.h"

namespace maxcard {
namespace {

constexpr double kE = std::numbers::e;
constexpr double kInvE = 1.0 / std::numbers::e;

// Root of g in [lo, hi], assuming g(lo) and g(hi) have opposite signs.
double Bisect(const std::function<double(double)>& g, double lo, double hi) {
  double g_lo = g(lo);
  if (g_lo * g(hi) > 0.0) {
    throw PreconditionError("bisection bracket does not change sign");
  }
  for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double g_mid = g(mid);
    if ((g_mid < 0.0) == (g_lo < 0.0)) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// min over y in [0, y_max] of max(f1, f2) for fixed x; both are affine in y,
// so the minimum is at a boundary or at the crossing, found by bisection.
RatioBoundPoint ProfileAt(double x, double y_max) {
  auto gap = [x](double y) { return NlpF1(x, y) - NlpF2(x, y); };
  // f1(x, 0) = 1 - 1/e > f2(x, 0), so f1 dominates at y = 0.
  const double y = gap(y_max) >= 0.0 ? y_max : Bisect(gap, 0.0, y_max);
  return {x, y, NlpObjective(x, y)};
}

}  // namespace

double XLogX(double x) {
  if (x == 0.0) return 0.0;
  return x * std::log(x);
}

double NlpF1(double x, double y) {
  return 1.0 - kInvE - ((1.0 - kInvE) * x - kInvE - kInvE * XLogX(x)) * y;
}

double NlpF2(double x, double y) {
  return 0.5 * (1.0 - kInvE) +
         0.5 * (kInvE + XLogX(x) + (1.0 - kInvE) * x) * y;
}

double NlpObjective(double x, double y) {
  return std::max(NlpF1(x, y), NlpF2(x, y));
}

double StationarityResidual(double x) {
  return std::log(x) + 3.0 - (kE + 1.0) * x;
}

GridScan ScanGrid(double step, double x_max, double y_max, double threshold,
                  int workers) {
  if (!(step > 0.0)) throw PreconditionError("grid step must be positive");
  const int64_t nx = std::llround(x_max / step);
  const int64_t ny = std::llround(y_max / step);
  workers = std::max(1, workers);
  std::vector<GridScan> partial(workers);
  auto scan_rows = [&](int worker) {
    GridScan& out = partial[worker];
    out.min.z = std::numeric_limits<double>::infinity();
    for (int64_t i = worker; i <= nx; i += workers) {
      const double x = static_cast<double>(i) * step;
      for (int64_t j = 0; j <= ny; ++j) {
        const double y = static_cast<double>(j) * step;
        const double z = NlpObjective(x, y);
        ++out.points;
        if (z < threshold) ++out.below_threshold;
        if (z < out.min.z ||
            (z == out.min.z && (x < out.min.x ||
                                (x == out.min.x && y < out.min.y)))) {
          out.min = {x, y, z};
        }
      }
    }
  };
  std::vector<std::thread> threads;
  for (int w = 1; w < workers; ++w) threads.emplace_back(scan_rows, w);
  scan_rows(0);
  for (auto& t : threads) t.join();

  GridScan total;
  total.min.z = std::numeric_limits<double>::infinity();
  for (const GridScan& part : partial) {
    total.points += part.points;
    total.below_threshold += part.below_threshold;
    const RatioBoundPoint& m = part.min;
    if (m.z < total.min.z ||
        (m.z == total.min.z &&
         (m.x < total.min.x || (m.x == total.min.x && m.y < total.min.y)))) {
      total.min = m;
    }
  }
  return total;
}

NlpSolution SolveNlp(double grid_step, double refine_tol, int workers) {
  if (!(grid_step > 0.0 && grid_step <= 0.01)) {
    throw PreconditionError("grid step must lie in (0, 0.01]");
  }
  constexpr double kYMax = 10.0;
  NlpSolution sol;

  // (b) Closed form.
  const double x_star = Bisect(StationarityResidual, 0.5, 1.0);
  const double y_star =
      (1.0 - kE) /
      (1.0 + x_star * (3.0 - 3.0 * kE + (2.0 - kE) * std::log(x_star)));
  sol.closed_form = {x_star, y_star, NlpObjective(x_star, y_star)};
  sol.stationarity_residual = StationarityResidual(x_star);
  sol.equalization_gap = std::abs(NlpF1(x_star, y_star) -
                                  NlpF2(x_star, y_star));

  // The other stationary point sits where f1 is non-decreasing in y, hence
  // f1 >= f1(x, 0) = 1 - 1/e, far above the minimum.
  sol.spurious_root = Bisect(StationarityResidual, 1e-9, 0.5);
  const double f1_slope =
      -((1.0 - kInvE) * sol.spurious_root - kInvE -
        kInvE * XLogX(sol.spurious_root));
  sol.spurious_root_rejected = sol.spurious_root < 0.07 && f1_slope >= 0.0 &&
                               NlpObjective(sol.spurious_root, 0.0) >=
                                   1.0 - kInvE - 1e-15;
  if (!sol.spurious_root_rejected) {
    throw DisagreementError("second stationary point was not rejected");
  }

  // (a) Grid scan, then bisection on the slope of the profile.
  sol.grid = ScanGrid(grid_step, 1.0, kYMax, 0.514, workers);
  const double h = 1e-5;
  auto slope = [&](double x) {
    return (ProfileAt(x + h, kYMax).z - ProfileAt(x - h, kYMax).z) / (2 * h);
  };
  double lo = std::max(sol.grid.min.x - 4 * grid_step, 2 * h);
  double hi = std::min(sol.grid.min.x + 4 * grid_step, 1.0 - 2 * h);
  const double x_num = Bisect(slope, lo, hi);
  sol.numeric = ProfileAt(x_num, kYMax);

  const double dx = std::abs(sol.numeric.x - sol.closed_form.x);
  const double dy = std::abs(sol.numeric.y - sol.closed_form.y);
  const double dz = std::abs(sol.numeric.z - sol.closed_form.z);
  if (dx > refine_tol || dy > refine_tol || dz > refine_tol) {
    throw DisagreementError(
        "numeric and closed-form minimizers differ: dx=" + std::to_string(dx) +
        " dy=" + std::to_string(dy) + " dz=" + std::to_string(dz));
  }
  return sol;
}

double GreedyPrefixBound(double delta_a, double f_oa) {
  return (1.0 + XLogX(delta_a)) * f_oa;
}

double BoundX(double delta_a, double f_oa, double f_o, double f_ga) {
  return (1.0 - kInvE) * f_o + kInvE * f_ga -
         (1.0 - kInvE) * delta_a * f_oa;
}

double BoundY(double delta_a, double f_oa, double f_o) {
  return 0.5 * (1.0 - kInvE) * f_o +
         0.5 * (kInvE + XLogX(delta_a) + (1.0 - kInvE) * delta_a) * f_oa;
}

}  // namespace maxcard
