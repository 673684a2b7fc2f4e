// Copyright 2026 The mkbell Authors
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

#ifndef MKBELL_RATIONAL_HPP
#define MKBELL_RATIONAL_HPP

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace mkbell {

// Unbounded exact arithmetic. Distillability and violation checks compare
// quantities like 2*lambda_j vs Delta and Delta^2 * 2^(N-1) vs 1 with strict
// inequalities whose boundary cases are realized by the states under study,
// so no floating point is allowed anywhere in the classification path.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q" (or a bare integer "p") into an exact rational.
/// Throws ParseError on malformed input or q == 0.
Rational parse_rational(const std::string& text);

/// Canonical text form: lowest terms, "p" when the denominator is 1,
/// otherwise "p/q". parse_rational(format_rational(r)) == r.
std::string format_rational(const Rational& value);

/// Nearest rational on the fixed 10^-9 grid, used when mapping measured
/// (floating-point) quantities back into exact coefficient space.
Rational quantize(double value);

/// Denominator of the quantization grid.
inline constexpr std::int64_t kQuantizationDenominator = 1000000000;

double to_double(const Rational& value);

/// Exact power of two as a rational, exponent may be negative.
Rational pow2_rational(int exponent);

/// floor(sqrt(v)) in pure integer arithmetic.
std::uint64_t integer_sqrt(std::uint64_t v);

}  // namespace mkbell

#endif  // MKBELL_RATIONAL_HPP
