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

#include "twistlo/error.hpp"

namespace twistlo {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::Domain: return "DomainError";
    case Errc::ClosedFormAvailable: return "ClosedFormAvailable";
    case Errc::NonConvergence: return "NonConvergence";
    case Errc::OffDiagonalTooLarge: return "OffDiagonalTooLarge";
    case Errc::SlopeOutOfRange: return "SlopeOutOfRange";
    case Errc::NoBracketFound: return "NoBracketFound";
    case Errc::RelatorNotCentral: return "RelatorNotCentral";
    case Errc::LongitudeOmegaNonzero: return "LongitudeOmegaNonzero";
    case Errc::CertificateFailed: return "CertificateFailed";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Internal: return "InternalError";
  }
  return "UnknownError";
}

bool is_numerical_failure(Errc code) noexcept {
  switch (code) {
    case Errc::NonConvergence:
    case Errc::OffDiagonalTooLarge:
    case Errc::NoBracketFound:
    case Errc::RelatorNotCentral:
    case Errc::LongitudeOmegaNonzero:
    case Errc::CertificateFailed:
    case Errc::Internal:
      return true;
    default:
      return false;
  }
}

}  // namespace twistlo
