// Copyright 2026 The RingBalance Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ringbal/rational.hpp"

#include <cctype>

namespace ringbal {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  // Trim surrounding whitespace.
  size_t begin = s.find_first_not_of(" \t");
  size_t end = s.find_last_not_of(" \t");
  if (begin == std::string::npos) throw ParseError("empty rational literal");
  s = s.substr(begin, end - begin + 1);

  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = (s[0] == '-');
    s = s.substr(1);
  }
  if (s.empty()) throw ParseError("sign without digits in rational literal");

  size_t slash = s.find('/');
  size_t dot = s.find('.');
  Rational value;
  if (slash != std::string::npos) {
    if (dot != std::string::npos)
      throw ParseError("rational literal mixes '/' and '.': " + text);
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw ParseError("malformed p/q rational: " + text);
    BigInt n(num), d(den);
    if (d == 0) throw ParseError("zero denominator in rational: " + text);
    value = Rational(n, d);
  } else if (dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty())
      throw ParseError("malformed decimal: " + text);
    if (!whole.empty() && !all_digits(whole))
      throw ParseError("malformed decimal: " + text);
    if (!frac.empty() && !all_digits(frac))
      throw ParseError("malformed decimal: " + text);
    BigInt scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt n = whole.empty() ? BigInt(0) : BigInt(whole);
    BigInt f = frac.empty() ? BigInt(0) : BigInt(frac);
    value = Rational(n * scale + f, scale);
  } else {
    if (!all_digits(s)) throw ParseError("malformed integer: " + text);
    value = Rational(BigInt(s));
  }
  return negative ? Rational(-value) : value;
}

std::string format_rational(const Rational& value) {
  std::string num = numerator(value).str();
  if (denominator(value) == 1) return num;
  return num + "/" + denominator(value).str();
}

}  // namespace ringbal
