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

#include <memory>
#include <string>
#include <string_view>

#include "heckeindex/qpoly.hpp"

namespace heckeindex {

// Largest n for which field construction also runs the irreducibility
// check and for which exact Hecke certificates are offered.
inline constexpr int kExactTableBound = 60;

/// Minimal polynomial of 2cos(pi/n) over Q, n >= 3.
///
/// Built from the Chebyshev-type polynomials D_m (D_m(2cos t) = 2cos(mt)):
/// the squarefree part of D_m(x) - 2 is the product of the primitive factors
/// Psi_d over all d | m, and Psi_m is recovered by exact division. The
/// minimal polynomial of 2cos(pi/n) = 2cos(2pi/(2n)) is Psi_{2n}.
///
/// Throws DomainError for n < 3.
QPoly minimal_polynomial_2cos(int n);

/// Irreducibility over Q of a monic integer polynomial of degree <= 24.
///
/// Works from the numerical roots alone: any monic factor over Q has integer
/// coefficients (Gauss) and is a product of a subset of the linear factors,
/// so it enumerates subsets of at most half the degree, keeps those whose
/// floating product is integral, and confirms candidates by exact division.
bool is_irreducible_over_q(const QPoly& monic_integer_poly);

/// The real field Q(2cos(pi/n)). Instances are interned per n and immutable.
class AlgebraicField {
 public:
  static std::shared_ptr<const AlgebraicField> get(int n);

  int n() const { return n_; }
  int degree() const { return modulus_.degree(); }
  const QPoly& modulus() const { return modulus_; }
  // 2cos(pi/n) in long double.
  long double generator_value() const { return generator_value_; }
  bool irreducibility_verified() const { return irreducibility_verified_; }

  AlgebraicField(int n, QPoly modulus, bool verified);

 private:
  int n_;
  QPoly modulus_;
  long double generator_value_;
  bool irreducibility_verified_;
};

enum class ArithOp { kAdd, kSub, kMul, kDiv };

/// Element of Q(2cos(pi/n)) stored as a residue of degree < deg(modulus).
class AlgebraicNumber {
 public:
  AlgebraicNumber(std::shared_ptr<const AlgebraicField> field, QPoly residue);

  static AlgebraicNumber generator(int n);
  static AlgebraicNumber from_rational(int n, const Rational& value);

  int n() const { return field_->n(); }
  const AlgebraicField& field() const { return *field_; }
  const std::shared_ptr<const AlgebraicField>& field_ptr() const {
    return field_;
  }
  const QPoly& residue() const { return residue_; }

  bool is_zero() const { return residue_.is_zero(); }
  bool is_rational() const { return residue_.degree() <= 0; }
  double to_double() const;
  long double to_long_double() const;
  // Sign from the floating value; exact zero is detected structurally.
  int sign() const;

  AlgebraicNumber operator-() const;
  AlgebraicNumber operator+(const AlgebraicNumber& other) const;
  AlgebraicNumber operator-(const AlgebraicNumber& other) const;
  AlgebraicNumber operator*(const AlgebraicNumber& other) const;
  AlgebraicNumber operator/(const AlgebraicNumber& other) const;
  AlgebraicNumber inverse() const;
  bool operator==(const AlgebraicNumber& other) const;

  // Residue in the generator L = 2cos(pi/n), e.g. "L + 1".
  std::string to_string() const;

 private:
  void require_same_field(const AlgebraicNumber& other) const;

  std::shared_ptr<const AlgebraicField> field_;
  QPoly residue_;
};

/// Parses a polynomial in the generator L = 2cos(pi/n) with rational
/// coefficients: "L", "-1/2", "L^2 - 1", "3/2*L + 1". Throws Error(kParse).
AlgebraicNumber parse_algebraic(int n, std::string_view text);

AlgebraicNumber algebraic_arith(const AlgebraicNumber& a,
                                const AlgebraicNumber& b, ArithOp op);

}  // namespace heckeindex
