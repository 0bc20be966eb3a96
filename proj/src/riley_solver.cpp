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

#include "twistlo/riley_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "twistlo/error.hpp"

namespace twistlo {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAngleLimitEps = 1e-8;
// Slack admitted when a caller's T sits on the band edge up to rounding.
constexpr double kBandSlack = 1e-12;

int sign_of(double v) { return (v > 0) - (v < 0); }

void check_n(int n) {
  if (n == 0 || n == -1) fail(Errc::Domain, "n must not be 0 or -1");
}

void check_s(double s) {
  if (!(s > 0) || !std::isfinite(s)) fail(Errc::Domain, "s must be a positive finite number");
}

double theta_from_offset(double offset) {
  return 2.0 * std::asin(std::sqrt(offset) / 2.0);
}

double T_from_offset(double s, double offset) { return s + 2.0 + offset / s; }

// t from (s, offset): T^2 - 4 = (T-2)(T+2) with T-2 = s + c/s.
double t_from_offset(double s, double offset) {
  const double T = T_from_offset(s, offset);
  return 0.5 * (T + std::sqrt((s + offset / s) * (T + 2.0)));
}

RepSolution make_solution(int n, double s, double offset, int iterations) {
  RepSolution sol;
  sol.n = n;
  sol.s = s;
  sol.offset = offset;
  sol.T = T_from_offset(s, offset);
  sol.t = t_from_offset(s, offset);
  sol.trace_W = 2.0 - offset;
  sol.theta = theta_from_offset(offset);
  sol.residual = std::abs(phi_at_offset(n, s, offset));
  sol.iterations = iterations;
  return sol;
}

}  // namespace

double tau_at_angle(int m, double theta) {
  if (theta < kAngleLimitEps) return m;
  if (kPi - theta < kAngleLimitEps) return ((m - 1) % 2 == 0) ? m : -m;
  return std::sin(m * theta) / std::sin(theta);
}

double tau_num(int m, double trace) {
  if (!(std::abs(trace) <= 2.0)) {
    std::ostringstream os;
    os << "trace " << trace << " outside [-2,2]";
    fail(Errc::Domain, os.str());
  }
  return tau_at_angle(m, std::acos(trace / 2.0));
}

double phi_at_offset(int n, double s, double offset) {
  check_n(n);
  const double theta = theta_from_offset(offset);
  // T - 1 - s = 1 + c/s
  return tau_at_angle(n + 1, theta) - (1.0 + offset / s) * tau_at_angle(n, theta);
}

double phi_num(int n, double s, double T) {
  check_n(n);
  check_s(s);
  double offset = s * (T - s - 2.0);
  if (!(offset >= -kBandSlack && offset <= 4.0 + kBandSlack)) {
    std::ostringstream os;
    os << "T = " << T << " outside [s+2, s+2+4/s] for s = " << s;
    fail(Errc::Domain, os.str());
  }
  offset = std::clamp(offset, 0.0, 4.0);
  return phi_at_offset(n, s, offset);
}

Bracket bracket(int n, double s) {
  check_n(n);
  check_s(s);
  if (n == 1) fail(Errc::ClosedFormAvailable, "n = 1 has the closed form T = s+2+1/(s+1)");

  Bracket b;
  if (n > 1) {
    const double k = 2.0 * n + 1.0;
    b.offset_lo = 2.0 - 2.0 * std::cos(kPi / k);
    b.offset_hi = 2.0 - 2.0 * std::cos(3.0 * kPi / k);
  } else if (n == -2) {
    b.offset_lo = 1.0;
    b.offset_hi = 2.0;
  } else {
    const double k = 2.0 * (-n) - 1.0;
    b.offset_lo = 2.0 - 2.0 * std::cos(kPi / k);
    b.offset_hi = 2.0 - 2.0 * std::cos(3.0 * kPi / k);
  }
  b.lo = T_from_offset(s, b.offset_lo);
  b.hi = T_from_offset(s, b.offset_hi);
  b.sign_lo = sign_of(phi_at_offset(n, s, b.offset_lo));
  b.sign_hi = sign_of(phi_at_offset(n, s, b.offset_hi));
  if (b.sign_lo * b.sign_hi != -1) {
    std::ostringstream os;
    os << "bracket endpoints for n = " << n << ", s = " << s
       << " do not change sign (" << b.sign_lo << ", " << b.sign_hi << ")";
    fail(Errc::Internal, os.str());
  }
  return b;
}

namespace {

// Secant steps kept inside [lo, hi]. At large s a T-width of tol still leaves
// an offset error near tol*s, which the longitude entries amplify.
double polish(int n, double s, double lo, double hi) {
  if (!(lo < hi)) return lo;
  double flo = phi_at_offset(n, s, lo);
  double fhi = phi_at_offset(n, s, hi);
  double best = std::abs(flo) <= std::abs(fhi) ? lo : hi;
  double fbest = std::min(std::abs(flo), std::abs(fhi));
  for (int k = 0; k < 8 && lo < hi; ++k) {
    if (flo == fhi) break;
    double x = lo - flo * (hi - lo) / (fhi - flo);
    if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);
    if (!(x > lo && x < hi)) break;
    const double fx = phi_at_offset(n, s, x);
    if (std::abs(fx) < fbest) {
      best = x;
      fbest = std::abs(fx);
    }
    if (fx == 0.0) break;
    if (sign_of(fx) == sign_of(flo)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
  }
  return best;
}

}  // namespace

RepSolution solve(int n, double s, double tol, int max_iter) {
  check_n(n);
  check_s(s);
  if (!(tol > 0)) fail(Errc::Domain, "tolerance must be positive");

  if (n == 1) return make_solution(n, s, s / (s + 1.0), 0);

  const Bracket b = bracket(n, s);
  double lo = b.offset_lo;
  double hi = b.offset_hi;
  int iterations = 0;
  // Width in T is (hi - lo)/s.
  while ((hi - lo) / s >= tol) {
    const double mid = 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi)) break;  // floating resolution reached
    if (iterations == max_iter) {
      std::ostringstream os;
      os << "bisection hit the iteration cap " << max_iter << " at T-width "
         << (hi - lo) / s << " (tolerance " << tol << ")";
      fail(Errc::NonConvergence, os.str());
    }
    ++iterations;
    const int sm = sign_of(phi_at_offset(n, s, mid));
    if (sm == 0) {
      lo = hi = mid;
      break;
    }
    if (sm == b.sign_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return make_solution(n, s, polish(n, s, lo, hi), iterations);
}

double t_from_T(double T) {
  if (!(T >= 2.0)) fail(Errc::Domain, "T must be at least 2");
  return 0.5 * (T + std::sqrt((T - 2.0) * (T + 2.0)));
}

std::vector<double> scan_all_roots(int n, double s, int grid, double tol) {
  check_n(n);
  check_s(s);
  if (grid < 2) fail(Errc::Domain, "grid must have at least 2 points");
  std::vector<double> roots;
  double prev_c = 0.0;
  double prev_v = phi_at_offset(n, s, prev_c);
  for (int i = 1; i <= grid; ++i) {
    const double c = 4.0 * i / grid;
    const double v = phi_at_offset(n, s, c);
    if (prev_v == 0.0) {
      roots.push_back(T_from_offset(s, prev_c));
    } else if (sign_of(v) == -sign_of(prev_v)) {
      double lo = prev_c, hi = c;
      const int slo = sign_of(prev_v);
      while ((hi - lo) / s >= tol) {
        const double mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi)) break;
        (sign_of(phi_at_offset(n, s, mid)) == slo ? lo : hi) = mid;
      }
      roots.push_back(T_from_offset(s, 0.5 * (lo + hi)));
    }
    prev_c = c;
    prev_v = v;
  }
  if (prev_v == 0.0) roots.push_back(T_from_offset(s, prev_c));
  return roots;
}

}  // namespace twistlo
