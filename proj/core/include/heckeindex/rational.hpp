// Copyright 2026 The heckeindex Authors
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

#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace heckeindex {

using Integer = mpz_class;
// mpq_class keeps gcd(|num|, den) = 1 and den > 0 after every operation we
// perform; make_rational canonicalizes values built from raw parts.
using Rational = mpq_class;

Rational make_rational(const Integer& numerator, const Integer& denominator);

// Accepts "7", "-3/4", "+12". No whitespace, no decimal point.
std::optional<Rational> parse_rational(std::string_view text);

// Accepts a decimal integer string ("-1234").
std::optional<Integer> parse_integer(std::string_view text);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

double to_double(const Rational& value);

// Nonnegative square root when the value is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& value);

}  // namespace heckeindex
