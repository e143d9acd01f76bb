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

#ifndef RINGBAL_RATIONAL_HPP
#define RINGBAL_RATIONAL_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace ringbal {

// All numeric quantities (capacities, demand values, congestion factors,
// fractional shares, widening costs) are exact rationals. GMP keeps them
// canonical: denominator > 0 and gcd(|num|, den) = 1, so strict
// inequalities are decidable without tolerances.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Parses "p/q", a plain integer string, or a decimal string such as
/// "-3.25" (expanded exactly in base 10). Throws ParseError on anything
/// else, including a zero denominator.
Rational parse_rational(const std::string& text);

/// Canonical string form: "p/q" with gcd(|p|,q)=1, or just "p" when q=1.
/// parse_rational(format_rational(x)) == x for every x.
std::string format_rational(const Rational& value);

inline Rational rational(long num, long den = 1) { return Rational(num, den); }

inline Rational abs_rational(const Rational& v) { return v < 0 ? Rational(-v) : v; }

}  // namespace ringbal

#endif  // RINGBAL_RATIONAL_HPP
