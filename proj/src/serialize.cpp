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

#include "twistlo/serialize.hpp"

#include <array>
#include <charconv>

#include "twistlo/error.hpp"

namespace twistlo {

const char* library_version() noexcept { return TWISTLO_VERSION_STRING; }

std::string format_double(double v) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) fail(Errc::Internal, "number formatting failed");
  return std::string(buf.data(), end);
}

Json poly_to_json(const BivarPoly& p) {
  Json arr = Json::array();
  for (const auto& [e, c] : p.terms()) {
    arr.push_back({{"s_deg", e.s_deg}, {"T_deg", e.T_deg}, {"coeff", c.get_str()}});
  }
  return arr;
}

BivarPoly poly_from_json(const Json& j) {
  if (!j.is_array()) fail(Errc::InvalidArgument, "polynomial JSON must be an array");
  BivarPoly p;
  for (const auto& term : j) {
    mpz_class c;
    if (c.set_str(term.at("coeff").get<std::string>(), 10) != 0) {
      fail(Errc::InvalidArgument, "malformed coefficient in polynomial JSON");
    }
    p += BivarPoly::monomial(term.at("s_deg").get<int>(), term.at("T_deg").get<int>(), c);
  }
  return p;
}

Json solution_to_json(const RepSolution& sol) {
  return {{"n", sol.n},           {"s", sol.s},
          {"T", sol.T},           {"t", sol.t},
          {"trace_W", sol.trace_W}, {"theta", sol.theta},
          {"offset", sol.offset}, {"residual", sol.residual},
          {"iterations", sol.iterations}};
}

Json bracket_to_json(const Bracket& b) {
  return {{"lo", b.lo}, {"hi", b.hi}, {"sign_lo", b.sign_lo}, {"sign_hi", b.sign_hi}};
}

Json sample_to_json(const SlopeSample& smp) {
  return {{"s", smp.s}, {"T", smp.T}, {"t", smp.t}, {"B", smp.B}, {"g", smp.g}};
}

Json holonomy_to_json(const HolonomyData& h) {
  return {{"A", h.A},
          {"B", h.B},
          {"B_matrix", h.B_matrix},
          {"sigma", h.sigma},
          {"offdiag_residual", h.offdiag_residual},
          {"entry_identity_residual", h.entry_identity_residual},
          {"entry_identity_scale", h.entry_identity_scale}};
}

Json certificate_to_json(const SurgeryCertificate& c) {
  Json j;
  j["library_version"] = library_version();
  j["n"] = c.n;
  j["p"] = c.p;
  j["q"] = c.q;
  j["s_star"] = c.s_star;
  j["T"] = c.T;
  j["t"] = c.t;
  j["B"] = c.B;
  j["g"] = c.g;
  j["gamma_x"] = c.gamma_x;
  j["gamma_L"] = c.gamma_L;
  j["relator_residual"] = c.relator_residual;
  j["deck_shift"] = c.deck_shift;
  j["longitude_omega"] = c.longitude_omega;
  j["longitude_gamma_residual"] = c.longitude_gamma_residual;
  j["final_gamma_abs"] = c.final_gamma_abs;
  j["final_omega"] = c.final_omega;
  j["projection_residual"] = c.projection_residual;
  j["tolerances"] = {{"tol_T", c.tolerances.tol_T},
                     {"tol_g", c.tolerances.tol_g},
                     {"tol_cert", c.tolerances.tol_cert}};
  j["valid"] = c.valid;
  if (!c.valid) j["failure"] = c.failure;
  return j;
}

std::string scan_to_csv(std::span<const SlopeSample> samples) {
  std::string out = "s,T,t,B,g\n";
  for (const auto& smp : samples) {
    out += format_double(smp.s) + ',' + format_double(smp.T) + ',' + format_double(smp.t) +
           ',' + format_double(smp.B) + ',' + format_double(smp.g) + '\n';
  }
  return out;
}

}  // namespace twistlo
