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

#include <span>
#include <string>

#include "json.hpp"
#include "twistlo/cover_lift.hpp"
#include "twistlo/poly_exact.hpp"

namespace twistlo {

using Json = nlohmann::ordered_json;

const char* library_version() noexcept;

/// Shortest decimal string that parses back to the same double (at most 17
/// significant digits).
std::string format_double(double v);

/// [{"s_deg": i, "T_deg": j, "coeff": "<decimal>"}, ...] ordered by T-degree,
/// then s-degree.
Json poly_to_json(const BivarPoly& p);
BivarPoly poly_from_json(const Json& j);

Json solution_to_json(const RepSolution& sol);
Json bracket_to_json(const Bracket& b);
Json sample_to_json(const SlopeSample& smp);
Json holonomy_to_json(const HolonomyData& h);
Json certificate_to_json(const SurgeryCertificate& cert);

/// Header "s,T,t,B,g" then one row per sample.
std::string scan_to_csv(std::span<const SlopeSample> samples);

}  // namespace twistlo
