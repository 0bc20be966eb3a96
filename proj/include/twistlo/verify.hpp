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

#include <string>
#include <vector>

#include "twistlo/serialize.hpp"

namespace twistlo {

struct VerifyGrid {
  std::vector<int> n_values{-6, -5, -4, -3, -2, 1, 2, 3, 4, 5, 6};
  std::vector<double> s_values{0.1, 0.5, 1.0, 2.0, 10.0, 100.0};
};

/// Outcome of one invariant family. worst is the largest observed error
/// measure, compared against threshold.
struct CheckResult {
  std::string name;
  bool passed = true;
  int cases = 0;
  double worst = 0;
  double threshold = 0;
  std::string detail;  // first failing case, if any
};

/// Runs the invariant suites of every module over the grid.
std::vector<CheckResult> run_verify(const VerifyGrid& grid = {});

Json verify_report_to_json(const std::vector<CheckResult>& results);

}  // namespace twistlo
