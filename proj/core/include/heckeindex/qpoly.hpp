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

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "heckeindex/rational.hpp"

namespace heckeindex {

/// Dense univariate polynomial with rational coefficients, lowest degree
/// first. Trailing zero coefficients are never stored, so the zero
/// polynomial has an empty coefficient vector and degree -1.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coefficients);
  QPoly(std::initializer_list<long> coefficients);

  static QPoly constant(const Rational& c);
  static QPoly monomial(const Rational& c, int degree);
  static QPoly x() { return monomial(Rational(1), 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  // Coefficient of x^i; zero beyond the degree.
  Rational coefficient(int i) const;
  const Rational& leading() const { return coeffs_.back(); }

  bool is_monic() const;
  bool is_integral() const;

  QPoly operator-() const;
  QPoly operator+(const QPoly& other) const;
  QPoly operator-(const QPoly& other) const;
  QPoly operator*(const QPoly& other) const;
  QPoly operator*(const Rational& scalar) const;
  bool operator==(const QPoly& other) const { return coeffs_ == other.coeffs_; }

  QPoly derivative() const;
  QPoly monic() const;

  long double evaluate(long double x) const;
  Rational evaluate(const Rational& x) const;

  // "x^2 - x - 1"
  std::string to_string(const std::string& variable = "x") const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

// Euclidean division: returns (quotient, remainder) with deg r < deg d.
std::pair<QPoly, QPoly> divmod(const QPoly& numerator, const QPoly& divisor);

// Monic greatest common divisor (zero if both inputs are zero).
QPoly gcd(const QPoly& a, const QPoly& b);

// Inverse of a modulo m. Throws an arithmetic Error when gcd(a, m) != 1.
QPoly inverse_mod(const QPoly& a, const QPoly& modulus);

}  // namespace heckeindex
