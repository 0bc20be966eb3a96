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

#include "twistlo/poly_exact.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <vector>

#include "twistlo/error.hpp"

namespace twistlo {

BivarPoly BivarPoly::constant(const mpz_class& c) { return monomial(0, 0, c); }

BivarPoly BivarPoly::monomial(int s_deg, int T_deg, const mpz_class& c) {
  if (s_deg < 0 || T_deg < 0) fail(Errc::InvalidArgument, "negative exponent in monomial");
  BivarPoly p;
  p.accumulate({T_deg, s_deg}, c);
  return p;
}

mpz_class BivarPoly::coeff(int s_deg, int T_deg) const {
  auto it = terms_.find({T_deg, s_deg});
  return it == terms_.end() ? mpz_class(0) : it->second;
}

int BivarPoly::degree_T() const noexcept {
  // Map is ordered by T-degree first.
  return terms_.empty() ? -1 : terms_.rbegin()->first.T_deg;
}

int BivarPoly::degree_s() const noexcept {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.s_deg);
  return d;
}

void BivarPoly::accumulate(const Exponents& e, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) accumulate(e, c);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) accumulate(e, -c);
  return *this;
}

BivarPoly operator*(const BivarPoly& lhs, const BivarPoly& rhs) {
  BivarPoly r;
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      r.accumulate({ea.T_deg + eb.T_deg, ea.s_deg + eb.s_deg}, ca * cb);
    }
  }
  return r;
}

std::string BivarPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    if (e.s_deg > 0) os << "*s^" << e.s_deg;
    if (e.T_deg > 0) os << "*T^" << e.T_deg;
  }
  return os.str();
}

BivarPoly trace_poly() {
  // s^2 - (T-2)s + 2 = s^2 - sT + 2s + 2
  BivarPoly p = BivarPoly::monomial(2, 0, 1);
  p -= BivarPoly::monomial(1, 1, 1);
  p += BivarPoly::monomial(1, 0, 2);
  p += BivarPoly::constant(2);
  return p;
}

namespace {

std::mutex tau_cache_mutex;
std::vector<BivarPoly>& tau_cache() {
  static std::vector<BivarPoly> cache{BivarPoly{}, BivarPoly::constant(1)};
  return cache;
}

}  // namespace

BivarPoly tau_poly(int m) {
  if (m < 0) return -tau_poly(-m);
  std::lock_guard lock(tau_cache_mutex);
  auto& cache = tau_cache();
  if (static_cast<std::size_t>(m) >= cache.size()) {
    const BivarPoly tr = trace_poly();
    cache.reserve(static_cast<std::size_t>(m) + 1);
    while (cache.size() <= static_cast<std::size_t>(m)) {
      const std::size_t k = cache.size() - 1;
      cache.push_back(tr * cache[k] - cache[k - 1]);
    }
  }
  return cache[static_cast<std::size_t>(m)];
}

BivarPoly riley_poly(int n) {
  if (n == 0 || n == -1) fail(Errc::Domain, "n must not be 0 or -1");
  // T - 1 - s
  BivarPoly factor = BivarPoly::T() - BivarPoly::constant(1) - BivarPoly::s();
  return tau_poly(n + 1) - factor * tau_poly(n);
}

mpq_class eval_exact(const BivarPoly& p, const mpq_class& s_in, const mpq_class& T_in) {
  if (p.is_zero()) return 0;
  mpq_class s = s_in, T = T_in;  // GMP arithmetic assumes canonical operands
  s.canonicalize();
  T.canonicalize();
  std::vector<mpq_class> s_pow(static_cast<std::size_t>(p.degree_s()) + 1);
  std::vector<mpq_class> T_pow(static_cast<std::size_t>(p.degree_T()) + 1);
  s_pow[0] = 1;
  T_pow[0] = 1;
  for (std::size_t i = 1; i < s_pow.size(); ++i) s_pow[i] = s_pow[i - 1] * s;
  for (std::size_t i = 1; i < T_pow.size(); ++i) T_pow[i] = T_pow[i - 1] * T;
  mpq_class sum = 0;
  for (const auto& [e, c] : p.terms()) {
    sum += mpq_class(c) * s_pow[static_cast<std::size_t>(e.s_deg)] *
           T_pow[static_cast<std::size_t>(e.T_deg)];
  }
  return sum;
}

double eval_exact(const BivarPoly& p, double s, double T) {
  // mpq_class(double) is exact for finite binary doubles.
  return eval_exact(p, mpq_class(s), mpq_class(T)).get_d();
}

}  // namespace twistlo
