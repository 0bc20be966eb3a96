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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "test_support.hpp"
#include "twistlo/cover_lift.hpp"
#include "twistlo/serialize.hpp"

using namespace twistlo;
using testing::code;
using testing::error_code;

namespace {

constexpr double kPi = std::numbers::pi;

struct Gen {
  std::mt19937_64 rng{424242};
  std::uniform_real_distribution<double> unit{0.0, 1.0};

  CoverElem cover() {
    const double r = 0.95 * unit(rng);
    const double a = 2 * kPi * unit(rng);
    return {std::polar(r, a), 20.0 * unit(rng) - 10.0};
  }
};

double dist(const CoverElem& a, const CoverElem& b) {
  return std::max(std::abs(a.gamma - b.gamma), std::abs(a.omega - b.omega));
}

}  // namespace

TEST_CASE("identity and inverse") {
  Gen g;
  for (int i = 0; i < 200; ++i) {
    const CoverElem a = g.cover();
    CHECK(dist(a * CoverElem::identity(), a) < 1e-14);
    CHECK(dist(CoverElem::identity() * a, a) < 1e-14);
    CHECK(dist(a * inverse(a), CoverElem::identity()) < 1e-12);
    CHECK(dist(inverse(a) * a, CoverElem::identity()) < 1e-12);
  }
}

TEST_CASE("associativity") {
  Gen g;
  for (int i = 0; i < 500; ++i) {
    const CoverElem a = g.cover(), b = g.cover(), c = g.cover();
    CHECK(dist((a * b) * c, a * (b * c)) < 1e-10);
  }
}

TEST_CASE("projection is a homomorphism") {
  Gen g;
  for (int i = 0; i < 500; ++i) {
    const CoverElem a = g.cover(), b = g.cover();
    CHECK(max_abs_diff(unchart(a * b), unchart(a) * unchart(b)) < 1e-10);
  }
}

TEST_CASE("deck elements are central") {
  Gen g;
  for (long k : {-3L, -1L, 1L, 2L}) {
    for (int i = 0; i < 50; ++i) {
      const CoverElem a = g.cover();
      const CoverElem l = CoverElem::deck(k) * a;
      const CoverElem r = a * CoverElem::deck(k);
      CHECK(std::abs(l.gamma - r.gamma) < 1e-14);
      CHECK(l.omega == r.omega);
      CHECK(l.omega == doctest::Approx(a.omega + 2 * kPi * k));
    }
  }
  CHECK(max_abs_diff(unchart(CoverElem::deck(3)), SU11Elem::identity()) < 1e-14);
}

TEST_CASE("real axis is a one-parameter subgroup") {
  for (double a : {-0.7, -0.1, 0.0, 0.3, 0.9}) {
    for (double b : {-0.5, 0.2, 0.8}) {
      const CoverElem p = CoverElem{{a, 0.0}, 0.0} * CoverElem{{b, 0.0}, 0.0};
      CHECK(p.omega == 0.0);
      CHECK(p.gamma.imag() == 0.0);
      CHECK(p.gamma.real() == doctest::Approx((a + b) / (1 + a * b)).epsilon(1e-14));
    }
  }
}

TEST_CASE("powers") {
  Gen g;
  const CoverElem a = g.cover();
  CHECK(dist(cover_pow(a, 0), CoverElem::identity()) == 0.0);
  CHECK(dist(cover_pow(a, 3), a * a * a) < 1e-12);
  CHECK(dist(cover_pow(a, -2), inverse(a) * inverse(a)) < 1e-12);
}

TEST_CASE("chart round trip and SL2(R) conversion") {
  Gen g;
  for (int i = 0; i < 100; ++i) {
    const CoverElem a = g.cover();
    const SU11Elem u = unchart(a);
    CHECK(u.norm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(max_abs_diff(to_su11(from_su11(u)), u) < 1e-12);
    const CoverElem back = chart(u);
    CHECK(std::abs(back.gamma - a.gamma) < 1e-13);
    const double dw = std::remainder(back.omega - a.omega, 2 * kPi);
    CHECK(std::abs(dw) < 1e-12);
  }
  const Mat2 m{1.0, 2.0, 3.0, 4.0};  // det -2
  CHECK(error_code([&] { to_su11(m); }) == code(Errc::Domain));
}

TEST_CASE("hyperbolic diagonal element lifts to the real axis") {
  const double t = 4.0;
  const Mat2 x{std::sqrt(t), 0.0, 0.0, 1.0 / std::sqrt(t)};
  const CoverElem c = chart(to_su11(x));
  CHECK(c.gamma.real() == doctest::Approx((t - 1) / (t + 1)).epsilon(1e-14));
  CHECK(std::abs(c.gamma.imag()) < 1e-15);
  CHECK(std::abs(c.omega) < 1e-15);
}

TEST_CASE("lifted generators satisfy the relator") {
  for (int n : {-3, -2, 1, 2, 3}) {
    const RepSolution sol = solve(n, 0.8);
    const LiftedGenerators lg = lift_generators(n, sol);
    CHECK(lg.relator_residual < 1e-9);
    CHECK(lg.x.omega == 0.0);
    const CoverElem L = lifted_longitude(n, lg.x, lg.y);
    CHECK(std::abs(L.omega) < 1e-6);
    CHECK(std::abs(L.gamma.imag()) < 1e-8);
  }
  const RepSolution sol = solve(2, 1.0);
  CHECK(error_code([&] { lift_generators(3, sol); }) == code(Errc::InvalidArgument));
}

TEST_CASE("certificate for n = 2, slope 1") {
  const SurgeryCertificate c = certificate(2, 1, 1);
  CHECK(c.valid);
  CHECK(c.failure.empty());
  CHECK(std::abs(c.g - 1.0) < 1e-9);
  CHECK(c.final_gamma_abs < 1e-6);
  CHECK(std::abs(c.final_omega) < 1e-6);
  CHECK(c.projection_residual < 1e-8);
  CHECK(std::abs(c.longitude_omega) < 1e-6);
  CHECK(c.gamma_x == doctest::Approx((c.t - 1) / (c.t + 1)));
  CHECK(c.gamma_L == doctest::Approx((c.B * c.B - 1) / (c.B * c.B + 1)));

  const Json j = certificate_to_json(c);
  CHECK(j["valid"] == true);
  CHECK(j.contains("library_version"));
  CHECK(j.contains("tolerances"));
  CHECK(j.dump() == certificate_to_json(certificate(2, 1, 1)).dump());
}

TEST_CASE("certificate failure is reported") {
  Tolerances tight;
  tight.tol_cert = 1e-13;
  const SurgeryCertificate c = build_certificate(2, 1, 1, tight);
  CHECK_FALSE(c.valid);
  CHECK_FALSE(c.failure.empty());
  CHECK(error_code([&] { certificate(2, 1, 1, tight); }) == code(Errc::CertificateFailed));
  CHECK(error_code([] { certificate(1, 4, 1); }) == code(Errc::SlopeOutOfRange));
}
