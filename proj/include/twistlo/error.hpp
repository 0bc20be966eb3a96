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

#include <stdexcept>
#include <string>
#include <string_view>

namespace twistlo {

// Values mirror twl_status in twistlo.h.
enum class Errc {
  Domain = 1,
  ClosedFormAvailable = 2,
  NonConvergence = 3,
  OffDiagonalTooLarge = 4,
  SlopeOutOfRange = 5,
  NoBracketFound = 6,
  RelatorNotCentral = 7,
  LongitudeOmegaNonzero = 8,
  CertificateFailed = 9,
  InvalidArgument = 10,
  Internal = 99,
};

std::string_view errc_name(Errc code) noexcept;

/// True for failures of the numerics (as opposed to bad input).
bool is_numerical_failure(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace twistlo
