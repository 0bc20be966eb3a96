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
#include <string_view>
#include <vector>

namespace twistlo {

/// Generator letters of G = <x, y | w^n x = y w^n>. Upper case is the inverse.
enum class Letter : char { x = 'x', y = 'y', X = 'X', Y = 'Y' };

using Word = std::vector<Letter>;

/// Parses letters "xyXY"; whitespace is ignored, anything else throws
/// Errc::InvalidArgument.
Word parse_word(std::string_view text);
std::string to_string(const Word& w);

Word inverse(const Word& w);
Word power(const Word& w, int k);
Word concat(const Word& a, const Word& b);

/// w = x y^-1 x^-1 y
Word word_w();
/// w_* = y x^-1 y^-1 x, the letters of w reversed.
Word word_w_star();
/// Longitude w_*^n w^n.
Word longitude_word(int n);
/// Relator (w^n x)(y w^n)^-1 = w^n x w^-n y^-1.
Word relator_word(int n);

/// Evaluates a word left to right in any group type G providing
/// G::identity(), operator* and inverse(const G&).
template <class G>
G evaluate_word(const Word& w, const G& x, const G& y) {
  const G xi = inverse(x);
  const G yi = inverse(y);
  G acc = G::identity();
  for (Letter l : w) {
    switch (l) {
      case Letter::x: acc = acc * x; break;
      case Letter::y: acc = acc * y; break;
      case Letter::X: acc = acc * xi; break;
      case Letter::Y: acc = acc * yi; break;
    }
  }
  return acc;
}

}  // namespace twistlo
