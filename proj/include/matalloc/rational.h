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

#ifndef MATALLOC_RATIONAL_H_
#define MATALLOC_RATIONAL_H_

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace matalloc {

// Exact rational backed by GMP. Expression templates are off so that
// `auto` behaves like a value everywhere.
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;
using BigInt =
    boost::multiprecision::number<boost::multiprecision::gmp_int,
                                  boost::multiprecision::et_off>;

// A value or +infinity (nullopt). Used for processing times.
using ExtRational = std::optional<Rational>;

Rational MakeRational(std::int64_t num, std::int64_t den = 1);

// Parses "p", "p/q" or a finite decimal such as "0.25".
Rational ParseRational(const std::string& text);

std::string ToString(const Rational& q);
std::string ToString(const ExtRational& q);

BigInt Floor(const Rational& q);
BigInt Ceil(const Rational& q);
std::int64_t FloorToInt64(const Rational& q);
std::int64_t CeilToInt64(const Rational& q);

// Throws ContractError if the value does not fit.
std::int64_t ToInt64(const BigInt& z);

Rational Pow(const Rational& base, int exponent);

// Comparisons on the extended line; nullopt is +infinity.
bool ExtLess(const ExtRational& a, const ExtRational& b);
ExtRational ExtAdd(const ExtRational& a, const ExtRational& b);
ExtRational ExtMax(const ExtRational& a, const ExtRational& b);

double ToDouble(const Rational& q);

}  // namespace matalloc

#endif  // MATALLOC_RATIONAL_H_
