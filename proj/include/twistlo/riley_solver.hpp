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

#include <vector>

namespace twistlo {

/// Default absolute tolerance on T and bisection iteration cap.
inline constexpr double kDefaultTolT = 1e-13;
inline constexpr int kDefaultMaxIter = 200;

// Points of the band s+2 <= T <= s+2+4/s are addressed by the offset
// c = s*(T-s-2) in [0,4]. Then trace(W) = 2 - c = 2cos(theta) with
// theta = 2*asin(sqrt(c)/2), which stays accurate for large and small s where
// forming s^2 - (T-2)s + 2 directly would cancel.

/// Sign-change bracket for Riley's equation at fixed s.
struct Bracket {
  double lo = 0;         // T lower bound
  double hi = 0;         // T upper bound
  int sign_lo = 0;       // sign of Phi_n(lo)
  int sign_hi = 0;       // sign of Phi_n(hi)
  double offset_lo = 0;  // c at lo
  double offset_hi = 0;  // c at hi
};

/// A solution (s, T) of Riley's equation with the derived parameters.
struct RepSolution {
  int n = 0;
  double s = 0;
  double T = 0;
  double t = 0;        // (T + sqrt(T^2-4))/2 > 1
  double trace_W = 0;  // s^2 - (T-2)s + 2, in (-2,2)
  double theta = 0;    // trace_W = 2cos(theta), theta in (0,pi)
  double offset = 0;   // c = s(T-s-2)
  double residual = 0; // |Phi_n| at the returned point
  int iterations = 0;  // bisection steps (0 for the closed form)
};

/// sin(m theta)/sin(theta) with the limits m and (-1)^(m-1) m at theta = 0, pi.
double tau_at_angle(int m, double theta);

/// Chebyshev-type value T_m(z) for z on the unit circle with z + 1/z = trace.
/// Throws Errc::Domain for |trace| > 2.
double tau_num(int m, double trace);

/// Phi_n(T) = T_{n+1}(z) - (T-1-s) T_n(z). T must lie in [s+2, s+2+4/s].
double phi_num(int n, double s, double T);

/// Phi_n expressed through the offset c = s(T-s-2), c in [0,4].
double phi_at_offset(int n, double s, double offset);

/// Certified bracket. Errc::Domain for n in {0,-1} or s <= 0;
/// Errc::ClosedFormAvailable for n = 1.
Bracket bracket(int n, double s);

/// Solve Riley's equation for T at the given s. Bisection inside bracket(n,s)
/// until the T-interval is below tol (or at floating resolution); the closed
/// form T = s+2+1/(s+1) for n = 1.
RepSolution solve(int n, double s, double tol = kDefaultTolT,
                  int max_iter = kDefaultMaxIter);

/// Larger root of t + 1/t = T. Throws Errc::Domain for T < 2.
double t_from_T(double T);

/// Every sign change of Phi_n over the whole band, located by bisection on a
/// uniform offset grid. Diagnostic only; solve() never uses it.
std::vector<double> scan_all_roots(int n, double s, int grid = 4000,
                                   double tol = kDefaultTolT);

}  // namespace twistlo
