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

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "heckeindex/errors.hpp"
#include "heckeindex/rational.hpp"

namespace heckeindex {

using Exponent = std::vector<int>;

// Graded-lexicographic order: total degree first, ties broken by comparing
// exponents from the first variable onward.
struct GradedLexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Multivariate Laurent polynomial with integer coefficients.
///
/// Terms live in a map keyed by exponent vector under GradedLexLess, so
/// iteration is canonical and two polynomials are equal iff their maps are.
/// Zero coefficients are never stored.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponent, Integer, GradedLexLess>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::vector<std::string> variables);

  static LaurentPoly constant(std::vector<std::string> variables,
                              const Integer& value);
  static LaurentPoly variable(std::vector<std::string> variables, int index);
  static LaurentPoly monomial(std::vector<std::string> variables,
                              Exponent exponent, const Integer& coefficient);

  const std::vector<std::string>& variables() const { return vars_; }
  int num_variables() const { return static_cast<int>(vars_.size()); }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  // Adds coefficient * x^exponent, dropping the term if it cancels.
  void add_term(const Exponent& exponent, const Integer& coefficient);

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& other) const;
  LaurentPoly operator-(const LaurentPoly& other) const;
  LaurentPoly operator*(const LaurentPoly& other) const;
  LaurentPoly pow(unsigned exponent) const;
  bool operator==(const LaurentPoly& other) const = default;

  // Total order used for canonical sorting: leading terms first.
  std::strong_ordering compare(const LaurentPoly& other) const;

  // Componentwise minimum / maximum exponent over all terms.
  Exponent min_exponent() const;

  Rational evaluate(std::span<const Rational> point) const;

  // "x1^-1*x2^2 + x1^-1", leading (grlex-largest) term first.
  std::string to_string() const;

 private:
  void require_same_variables(const LaurentPoly& other) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

/// Raised when exact_div finds a nonzero remainder.
class DivisibilityError : public Error {
 public:
  DivisibilityError(const std::string& what, LaurentPoly remainder)
      : Error(ErrorKind::kDivisibility, what),
        remainder_(std::move(remainder)) {}

  const LaurentPoly& remainder() const { return remainder_; }

 private:
  LaurentPoly remainder_;
};

/// Exact quotient p / q in Z[x^{+-1}]. Throws DivisibilityError carrying the
/// remainder of the normalized polynomial division when q does not divide p.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q);

enum class LaurentOp { kAdd, kMul, kExactDiv };

LaurentPoly laurent_arith(const LaurentPoly& p, const LaurentPoly& q,
                          LaurentOp op);

// Vacuously true for the zero polynomial.
bool is_positive(const LaurentPoly& p);

// {"x1", ..., "xn"}
std::vector<std::string> standard_variables(int n);

}  // namespace heckeindex
