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

#include "heckeindex/rational.hpp"

#include <cctype>

#include "heckeindex/errors.hpp"

namespace heckeindex {

Rational make_rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) {
    throw Error(ErrorKind::kArithmetic, "zero denominator");
  }
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

std::optional<Integer> parse_integer(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  if (i == text.size()) return std::nullopt;
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) return std::nullopt;
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return Integer(digits, 10);
}

std::optional<Rational> parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto num = parse_integer(text);
    if (!num) return std::nullopt;
    return Rational(*num);
  }
  auto num = parse_integer(text.substr(0, slash));
  auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '+' || den_text[0] == '-')) {
    return std::nullopt;
  }
  auto den = parse_integer(den_text);
  if (!num || !den || *den == 0) return std::nullopt;
  return make_rational(*num, *den);
}

std::string to_string(const Integer& value) { return value.get_str(10); }

std::string to_string(const Rational& value) { return value.get_str(10); }

double to_double(const Rational& value) { return value.get_d(); }

std::optional<Rational> exact_sqrt(const Rational& value) {
  if (value < 0) return std::nullopt;
  const Integer& num = value.get_num();
  const Integer& den = value.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  Integer rn = sqrt(num);
  Integer rd = sqrt(den);
  return make_rational(rn, rd);
}

}  // namespace heckeindex
