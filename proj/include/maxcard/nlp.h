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

#ifndef MAXCARD_NLP_H_
#define MAXCARD_NLP_H_

#include <cstdint>

namespace maxcard {

// x ln x, with the value 0 at x = 0.
double XLogX(double x);

// The two lower bounds on the efficient protocol's ratio, as functions of
// x (the normalized residual gain of Alice's greedy set) and y (the share of
// the optimum held by Alice):
//   f1 = 1 - 1/e - [(1 - 1/e) x - 1/e - x ln x / e] y
//   f2 = (1 - 1/e)/2 + [1/e + x ln x + (1 - 1/e) x] y / 2
double NlpF1(double x, double y);
double NlpF2(double x, double y);
// max(f1, f2).
double NlpObjective(double x, double y);

// ln x + 3 - (e + 1) x; its root in [0.5, 1] is the minimizer's x.
double StationarityResidual(double x);

struct RatioBoundPoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

struct GridScan {
  RatioBoundPoint min;
  int64_t points = 0;
  // Points with objective strictly below the threshold.
  int64_t below_threshold = 0;
};

// Evaluates the objective on the grid {i*step} x {j*step} covering
// [0, x_max] x [0, y_max]. Rows are split across `workers` threads; the
// reduction is deterministic.
GridScan ScanGrid(double step, double x_max, double y_max, double threshold,
                  int workers = 1);

struct NlpSolution {
  RatioBoundPoint closed_form;
  RatioBoundPoint numeric;
  GridScan grid;
  double stationarity_residual = 0.0;
  double equalization_gap = 0.0;  // |f1 - f2| at the closed-form point
  double spurious_root = 0.0;     // the other root of StationarityResidual
  bool spurious_root_rejected = false;
};

// Minimizes max(f1, f2) over [0,1] x [0,10] twice: (a) grid scan followed by
// bisection on the numerically differentiated profile min_y max(f1, f2);
// (b) the closed form x* = root of StationarityResidual in [0.5, 1],
// y* = (1 - e)/(1 + x*(3 - 3e + (2 - e) ln x*)). Also locates the second
// root of StationarityResidual below 0.07 and rejects it because f1 >= 1-1/e
// there. Throws DisagreementError if (a) and (b) differ by more than
// refine_tol in x, y or z, or if the spurious root is not rejected.
NlpSolution SolveNlp(double grid_step, double refine_tol, int workers = 1);

// Lower bounds used to audit single runs of the efficient
// protocol. delta_a is f(O∩V_A | G_A) / f(O∩V_A), f_oa = f(O∩V_A),
// f_o = f(O), f_ga = f(G_A).
double GreedyPrefixBound(double delta_a, double f_oa);
double BoundX(double delta_a, double f_oa, double f_o, double f_ga);
double BoundY(double delta_a, double f_oa, double f_o);

}  // namespace maxcard

#endif  // MAXCARD_NLP_H_
