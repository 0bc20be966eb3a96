// Copyright 2026 The twistlo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <utility>
#include <vector>

#include "twistlo/riley_solver.hpp"

namespace twistlo {

/// One evaluation of the slope map g(s) = -log B_s / log A_s, A_s = sqrt t.
struct SlopeSample {
  double s = 0;
  double T = 0;
  double t = 0;
  double B = 0;
  double g = 0;
};

SlopeSample g_eval(int n, double s, double tol_T = kDefaultTolT);

/// Logarithmically spaced samples on [s_min, s_max], sorted by s.
std::vector<SlopeSample> scan(int n, double s_min, double s_max, int samples,
                              double tol_T = kDefaultTolT);

struct InvertOptions {
  double tol_g = 1e-9;
  double tol_T = kDefaultTolT;
  double s_min = 1e-6;
  double s_max = 1e8;
  int grid = 400;
  int max_iter = 200;
  // Adjacent grid values of g straddling r further apart than this are
  // treated as a branch jump, not a crossing.
  double max_jump = 0.5;
};

struct Inversion {
  SlopeSample sample;
  /// Every grid interval [s_i, s_{i+1}] on which g - r changes sign.
  std::vector<std::pair<double, double>> brackets;
  int iterations = 0;
};

/// Finds s with |g(s) - p/q| <= tol_g, bisecting (in log s) the leftmost
/// sign change of g - p/q on the search grid.
/// Errors: Errc::Domain if q <= 0 or gcd(p,q) != 1; Errc::SlopeOutOfRange if
/// p/q is not in (0,4); Errc::NoBracketFound if no usable sign change exists;
/// Errc::NonConvergence if the bisection stalls above tol_g.
Inversion invert(int n, long p, long q, const InvertOptions& opts = {});

}  // namespace twistlo
