// Copyright 2026 The Authors.
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
#include "matalloc/rational.h"

#include <limits>
#include <sstream>

#include "matalloc/errors.h"

namespace matalloc {

Rational MakeRational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ContractError("rational with zero denominator");
  return Rational(BigInt(num), BigInt(den));
}

Rational ParseRational(const std::string& text) {
  if (text.empty()) throw ContractError("empty rational literal");
  auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      BigInt num(text.substr(0, slash));
      BigInt den(text.substr(slash + 1));
      if (den == 0) throw ContractError("rational with zero denominator");
      return Rational(num, den);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(BigInt(text));
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    BigInt scale = 1;
    for (std::size_t i = dot + 1; i < text.size(); ++i) scale *= 10;
    if (digits.empty() || digits == "-" || digits == "+") {
      throw ContractError("malformed rational literal '" + text + "'");
    }
    return Rational(BigInt(digits), scale);
  } catch (const std::runtime_error&) {
    throw ContractError("malformed rational literal '" + text + "'");
  }
}

std::string ToString(const Rational& q) {
  std::ostringstream out;
  out << numerator(q);
  if (denominator(q) != 1) out << "/" << denominator(q);
  return out.str();
}

std::string ToString(const ExtRational& q) {
  return q.has_value() ? ToString(*q) : std::string("inf");
}

BigInt Floor(const Rational& q) {
  BigInt num = numerator(q);
  BigInt den = denominator(q);
  BigInt quotient = num / den;
  if (num < 0 && quotient * den != num) quotient -= 1;
  return quotient;
}

BigInt Ceil(const Rational& q) { return -Floor(-q); }

std::int64_t ToInt64(const BigInt& z) {
  if (z > std::numeric_limits<std::int64_t>::max() ||
      z < std::numeric_limits<std::int64_t>::min()) {
    throw ContractError("integer does not fit in 64 bits");
  }
  return z.convert_to<std::int64_t>();
}

std::int64_t FloorToInt64(const Rational& q) { return ToInt64(Floor(q)); }
std::int64_t CeilToInt64(const Rational& q) { return ToInt64(Ceil(q)); }

Rational Pow(const Rational& base, int exponent) {
  Rational result = 1;
  Rational factor = exponent >= 0 ? base : Rational(1) / base;
  for (int e = exponent >= 0 ? exponent : -exponent; e > 0; --e) {
    result *= factor;
  }
  return result;
}

bool ExtLess(const ExtRational& a, const ExtRational& b) {
  if (!a.has_value()) return false;
  if (!b.has_value()) return true;
  return *a < *b;
}

ExtRational ExtAdd(const ExtRational& a, const ExtRational& b) {
  if (!a.has_value() || !b.has_value()) return std::nullopt;
  return *a + *b;
}

ExtRational ExtMax(const ExtRational& a, const ExtRational& b) {
  return ExtLess(a, b) ? b : a;
}

double ToDouble(const Rational& q) { return q.convert_to<double>(); }

}  // namespace matalloc
