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

#include "twistlo/word.hpp"

#include <cctype>
#include <cstdlib>

#include "twistlo/error.hpp"

namespace twistlo {

Word parse_word(std::string_view text) {
  Word w;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    switch (ch) {
      case 'x': w.push_back(Letter::x); break;
      case 'y': w.push_back(Letter::y); break;
      case 'X': w.push_back(Letter::X); break;
      case 'Y': w.push_back(Letter::Y); break;
      default:
        fail(Errc::InvalidArgument, std::string("unknown generator letter '") + ch + "'");
    }
  }
  return w;
}

std::string to_string(const Word& w) {
  std::string out;
  out.reserve(w.size());
  for (Letter l : w) out.push_back(static_cast<char>(l));
  return out;
}

namespace {
Letter invert_letter(Letter l) {
  switch (l) {
    case Letter::x: return Letter::X;
    case Letter::y: return Letter::Y;
    case Letter::X: return Letter::x;
    case Letter::Y: return Letter::y;
  }
  return l;
}
}  // namespace

Word inverse(const Word& w) {
  Word r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(invert_letter(*it));
  return r;
}

Word power(const Word& w, int k) {
  const Word base = k < 0 ? inverse(w) : w;
  Word r;
  r.reserve(base.size() * static_cast<std::size_t>(std::abs(k)));
  for (int i = 0; i < std::abs(k); ++i) r.insert(r.end(), base.begin(), base.end());
  return r;
}

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Word word_w() { return {Letter::x, Letter::Y, Letter::X, Letter::y}; }

Word word_w_star() { return {Letter::y, Letter::X, Letter::Y, Letter::x}; }

Word longitude_word(int n) { return concat(power(word_w_star(), n), power(word_w(), n)); }

Word relator_word(int n) {
  Word r = power(word_w(), n);
  r.push_back(Letter::x);
  r = concat(r, power(word_w(), -n));
  r.push_back(Letter::Y);
  return r;
}

}  // namespace twistlo
