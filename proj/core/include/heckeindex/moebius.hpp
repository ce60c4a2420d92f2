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

#include <cmath>
#include <complex>
#include <string>
#include <variant>

#include "heckeindex/algebraic.hpp"
#include "heckeindex/errors.hpp"
#include "heckeindex/membership.hpp"
#include "heckeindex/rational.hpp"

namespace heckeindex {

using Complex = std::complex<double>;

// Scalar modes a Mat2 can carry. Each mode supplies its own zero/one (the
// algebraic mode needs the field of an existing element) and a floating
// projection.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool kExact = true;
  static Rational zero_like(const Rational&) { return Rational(0); }
  static Rational one_like(const Rational&) { return Rational(1); }
  static Complex to_complex(const Rational& v) { return {to_double(v), 0.0}; }
};

template <>
struct ScalarTraits<AlgebraicNumber> {
  static constexpr bool kExact = true;
  static AlgebraicNumber zero_like(const AlgebraicNumber& v) {
    return AlgebraicNumber(v.field_ptr(), QPoly());
  }
  static AlgebraicNumber one_like(const AlgebraicNumber& v) {
    return AlgebraicNumber(v.field_ptr(), QPoly::constant(Rational(1)));
  }
  static Complex to_complex(const AlgebraicNumber& v) {
    return {v.to_double(), 0.0};
  }
};

template <>
struct ScalarTraits<Complex> {
  static constexpr bool kExact = false;
  static Complex zero_like(const Complex&) { return {0.0, 0.0}; }
  static Complex one_like(const Complex&) { return {1.0, 0.0}; }
  static Complex to_complex(const Complex& v) { return v; }
};

inline constexpr double kFloatingDeterminantTolerance = 1e-9;

class InvalidMatrixError : public Error {
 public:
  explicit InvalidMatrixError(const std::string& what)
      : Error(ErrorKind::kInvalidMatrix, what) {}
};

/// 2x2 matrix of determinant one: exactly in the exact modes, within
/// kFloatingDeterminantTolerance in the complex mode.
template <class T>
class Mat2 {
 public:
  Mat2(T a, T b, T c, T d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    check_determinant();
  }

  static Mat2 identity_like(const T& sample) {
    using Tr = ScalarTraits<T>;
    return Mat2(Tr::one_like(sample), Tr::zero_like(sample),
                Tr::zero_like(sample), Tr::one_like(sample));
  }

  const T& a() const { return a_; }
  const T& b() const { return b_; }
  const T& c() const { return c_; }
  const T& d() const { return d_; }

  T determinant() const { return a_ * d_ - b_ * c_; }
  T trace() const { return a_ + d_; }
  T trace_squared() const { return trace() * trace(); }

  Mat2 operator*(const Mat2& o) const {
    return Mat2(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_,
                c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_, Unchecked{});
  }
  Mat2 operator-() const { return Mat2(-a_, -b_, -c_, -d_, Unchecked{}); }
  // Adjugate; equals the inverse because det = 1.
  Mat2 inverse() const { return Mat2(d_, -b_, -c_, a_, Unchecked{}); }
  bool operator==(const Mat2& o) const {
    return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
  }

  bool is_identity() const { return *this == identity_like(a_); }
  bool is_minus_identity() const { return *this == -identity_like(a_); }

 private:
  struct Unchecked {};
  Mat2(T a, T b, T c, T d, Unchecked)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  void check_determinant() const {
    const T det = determinant();
    if constexpr (ScalarTraits<T>::kExact) {
      if (!(det == ScalarTraits<T>::one_like(a_))) {
        throw InvalidMatrixError("determinant is not exactly 1");
      }
    } else {
      if (std::abs(det - Complex(1.0, 0.0)) > kFloatingDeterminantTolerance) {
        throw InvalidMatrixError("determinant differs from 1 by more than 1e-9");
      }
    }
  }

  T a_, b_, c_, d_;
};

using RationalMat2 = Mat2<Rational>;
using AlgebraicMat2 = Mat2<AlgebraicNumber>;
using ComplexMat2 = Mat2<Complex>;
using AnyMat2 = std::variant<RationalMat2, AlgebraicMat2, ComplexMat2>;

template <class T>
ComplexMat2 to_complex(const Mat2<T>& m) {
  using Tr = ScalarTraits<T>;
  return ComplexMat2(Tr::to_complex(m.a()), Tr::to_complex(m.b()),
                     Tr::to_complex(m.c()), Tr::to_complex(m.d()));
}

ComplexMat2 to_complex(const AnyMat2& m);

// Multiplies two matrices of the same mode. Mixed modes throw DomainError.
AnyMat2 multiply(const AnyMat2& x, const AnyMat2& y);

enum class TransformTag {
  kLoxodromic,
  kHyperbolic,
  kParabolic,
  kEllipticFinite,
  kEllipticGeneric,
};

const char* transform_tag_name(TransformTag tag);

struct TransformKind {
  TransformTag tag = TransformTag::kParabolic;
  int order = 0;  // >= 2 for kEllipticFinite, 0 otherwise

  bool operator==(const TransformKind&) const = default;
};

struct Classification {
  TransformKind kind;
  Complex trace_squared;
  bool exact = false;  // tr^2 compared exactly against 0 and 4
};

// Largest denominator tried when recovering an elliptic rotation order.
inline constexpr long kMaxEllipticOrder = 10000;

/// Classifies from tr^2 alone (floating).
TransformKind classify_trace_squared(Complex tau, double tol);

/// Finite order q when theta/pi is within tolerance of p/q, q <= 10^4,
/// measured on tr^2 = 4cos^2(pi p/q); 0 when no such order exists.
int elliptic_order(double tau, double tol);

template <class T>
Classification classify(const Mat2<T>& m, double tol = kDefaultTolerance);

Classification classify(const AnyMat2& m, double tol = kDefaultTolerance);

class NotLoxodromicError : public Error {
 public:
  explicit NotLoxodromicError(const std::string& what)
      : Error(ErrorKind::kNotLoxodromic, what) {}
};

/// diag(sqrt k, 1/sqrt k), principal branch.
ComplexMat2 schottky_matrix(Complex k);
/// Exact when k is the square of a rational, floating otherwise.
AnyMat2 schottky_matrix(const Rational& k);

/// A point of the Riemann sphere.
struct ExtendedComplex {
  Complex value{0.0, 0.0};
  bool infinite = false;

  static ExtendedComplex infinity() { return {{0.0, 0.0}, true}; }
  static ExtendedComplex finite(Complex z) { return {z, false}; }
  bool operator==(const ExtendedComplex&) const = default;
};

ExtendedComplex mobius_apply(const ComplexMat2& m, ExtendedComplex z);

template <class T>
ExtendedComplex mobius_apply(const Mat2<T>& m, ExtendedComplex z) {
  return mobius_apply(to_complex(m), z);
}

class ModuliDomainError : public Error {
 public:
  explicit ModuliDomainError(const std::string& what)
      : Error(ErrorKind::kModuliDomain, what) {}
};

class NoRealModulusError : public Error {
 public:
  explicit NoRealModulusError(const std::string& what)
      : Error(ErrorKind::kNoRealModulus, what) {}
};

// (t + 1)^2 / t for an annulus modulus t > 1.
double trace_squared_of_modulus(double t);
// Root t >= 1 of t^2 + (2 - v) t + 1 = 0, v >= 4.
double modulus_from_trace_squared(double v);

// 4cos^2(pi/n)
double jones_discrete_value(int n);

/// Membership in [4, inf) U {4cos^2(pi/n) : 3 <= n <= n_max}. Throws
/// ToleranceConfigError unless tol is below half the smallest gap between
/// set points up to n_max.
IndexMembership jones_admissible(double v, double tol = kDefaultTolerance,
                                 int n_max = kDefaultNMax);

// CSV "n,index_value,lambda" for 3 <= n <= n_max.
std::string jones_discrete_table_csv(int n_max);

}  // namespace heckeindex
