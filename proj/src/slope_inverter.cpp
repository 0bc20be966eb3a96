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

#include "twistlo/slope_inverter.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "twistlo/error.hpp"
#include "twistlo/rep_numeric.hpp"

namespace twistlo {

SlopeSample g_eval(int n, double s, double tol_T) {
  const RepSolution sol = solve(n, s, tol_T);
  SlopeSample out;
  out.s = s;
  out.T = sol.T;
  out.t = sol.t;
  out.B = longitude_B(sol);
  out.g = -2.0 * std::log(out.B) / std::log(out.t);
  return out;
}

std::vector<SlopeSample> scan(int n, double s_min, double s_max, int samples, double tol_T) {
  if (!(s_min > 0 && s_min < s_max)) fail(Errc::Domain, "scan needs 0 < s_min < s_max");
  if (samples < 2) fail(Errc::Domain, "scan needs at least 2 samples");
  const double log_lo = std::log(s_min);
  const double step = (std::log(s_max) - log_lo) / (samples - 1);
  std::vector<SlopeSample> out;
  out.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    // Pin the endpoints exactly.
    const double s = i == 0 ? s_min : i == samples - 1 ? s_max : std::exp(log_lo + step * i);
    out.push_back(g_eval(n, s, tol_T));
  }
  return out;
}

Inversion invert(int n, long p, long q, const InvertOptions& opts) {
  if (q <= 0) fail(Errc::Domain, "slope denominator must be positive");
  if (std::gcd(p, q) != 1) fail(Errc::Domain, "slope p/q must be in lowest terms");
  if (!(p > 0 && p < 4 * q)) {
    std::ostringstream os;
    os << "slope " << p << "/" << q << " outside (0,4)";
    fail(Errc::SlopeOutOfRange, os.str());
  }
  const double r = static_cast<double>(p) / static_cast<double>(q);

  const std::vector<SlopeSample> grid = scan(n, opts.s_min, opts.s_max, opts.grid, opts.tol_T);

  Inversion out;
  std::size_t first = grid.size();
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double a = grid[i].g - r;
    const double b = grid[i + 1].g - r;
    if (a == 0.0) {
      out.brackets.emplace_back(grid[i].s, grid[i].s);
      if (first == grid.size()) first = i;
    } else if ((a < 0) != (b < 0) && b != 0.0) {
      out.brackets.emplace_back(grid[i].s, grid[i + 1].s);
      if (first == grid.size()) first = i;
    }
  }
  if (first == grid.size()) {
    std::ostringstream os;
    os.precision(17);
    os << "no sign change of g - " << r << " on [" << opts.s_min << ", " << opts.s_max
       << "]; scan table (s, g):";
    for (const auto& smp : grid) os << "\n  " << smp.s << ", " << smp.g;
    fail(Errc::NoBracketFound, os.str());
  }

  const SlopeSample& left = grid[first];
  const SlopeSample& right = grid[first + 1];
  if (left.g - r == 0.0) {
    out.sample = left;
    return out;
  }
  if (std::abs(right.g - left.g) > opts.max_jump) {
    std::ostringstream os;
    os.precision(17);
    os << "g jumps from " << left.g << " to " << right.g << " between s = " << left.s
       << " and s = " << right.s << "; refusing to bisect across a branch change";
    fail(Errc::NoBracketFound, os.str());
  }

  double lo = std::log(left.s), hi = std::log(right.s);
  const bool lo_below = left.g < r;
  SlopeSample best = std::abs(left.g - r) < std::abs(right.g - r) ? left : right;
  int it = 0;
  // Aim below tol_g; certificate residuals scale with |g - r|.
  const double aim = opts.tol_g / 16;
  while (std::abs(best.g - r) > aim) {
    const double mid = 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi) || it == opts.max_iter) {
      if (std::abs(best.g - r) < opts.tol_g) break;
      std::ostringstream os;
      os.precision(17);
      os << "slope bisection stalled at s = " << best.s << " with |g - r| = "
         << std::abs(best.g - r) << " after " << it << " steps";
      fail(Errc::NonConvergence, os.str());
    }
    ++it;
    const SlopeSample m = g_eval(n, std::exp(mid), opts.tol_T);
    if (std::abs(m.g - r) < std::abs(best.g - r)) best = m;
    if ((m.g < r) == lo_below) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  out.sample = best;
  out.iterations = it;
  return out;
}

}  // namespace twistlo
