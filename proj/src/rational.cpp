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

#include "mkbell/rational.hpp"

#include <cmath>
#include <cstddef>

#include "mkbell/errors.hpp"

namespace mkbell {

namespace {

bool is_integer_literal(const std::string& s) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num_part = text.substr(0, slash);
    if (!is_integer_literal(num_part)) {
        throw ParseError("malformed rational '" + text + "'");
    }
    BigInt num(num_part);
    BigInt den(1);
    if (slash != std::string::npos) {
        const std::string den_part = text.substr(slash + 1);
        if (!is_integer_literal(den_part) || den_part[0] == '-' || den_part[0] == '+') {
            throw ParseError("malformed rational '" + text + "'");
        }
        den = BigInt(den_part);
        if (den == 0) {
            throw ParseError("zero denominator in rational '" + text + "'");
        }
    }
    return Rational(num, den);
}

std::string format_rational(const Rational& value) {
    // cpp_rational is always stored in lowest terms with positive denominator.
    std::string out = numerator(value).str();
    if (denominator(value) != 1) {
        out += "/" + denominator(value).str();
    }
    return out;
}

Rational quantize(double value) {
    const double scaled = value * static_cast<double>(kQuantizationDenominator);
    const auto ticks = static_cast<std::int64_t>(std::llround(scaled));
    return Rational(BigInt(ticks), BigInt(kQuantizationDenominator));
}

double to_double(const Rational& value) {
    return value.convert_to<double>();
}

Rational pow2_rational(int exponent) {
    if (exponent >= 0) {
        return Rational(BigInt(1) << exponent, BigInt(1));
    }
    return Rational(BigInt(1), BigInt(1) << (-exponent));
}

std::uint64_t integer_sqrt(std::uint64_t v) {
    if (v == 0) return 0;
    auto s = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
    // sqrt() may be off by one ulp either way near perfect squares.
    while (s > 0 && s * s > v) --s;
    while ((s + 1) * (s + 1) <= v) ++s;
    return s;
}

}  // namespace mkbell
