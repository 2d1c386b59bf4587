// Copyright 2026 The rbim Authors.
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

#ifndef RBIM_RATIONAL_H_
#define RBIM_RATIONAL_H_

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace rbim {

// Exact arbitrary-precision rational. Always kept in lowest terms.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string FormatFraction(const Rational& value);

// Decimal rendering with 6 significant digits, e.g. "0.555556".
std::string FormatDecimal(const Rational& value);

// Parses "p/q" or "p". Throws std::invalid_argument on malformed input or a
// zero denominator.
Rational ParseRational(const std::string& text);

// n! as an exact integer.
BigInt Factorial(std::uint32_t n);

}  // namespace rbim

#endif  // RBIM_RATIONAL_H_
