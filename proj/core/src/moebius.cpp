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

#include "heckeindex/moebius.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "heckeindex/continued_fraction.hpp"

namespace heckeindex {

ComplexMat2 to_complex(const AnyMat2& m) {
  return std::visit([](const auto& x) { return to_complex(x); }, m);
}

AnyMat2 multiply(const AnyMat2& x, const AnyMat2& y) {
  if (x.index() != y.index()) {
    throw DomainError("cannot multiply matrices of different scalar modes");
  }
  return std::visit(
      [&](const auto& a) -> AnyMat2 {
        using M = std::decay_t<decltype(a)>;
        return a * std::get<M>(y);
      },
      x);
}

const char* transform_tag_name(TransformTag tag) {
  switch (tag) {
    case TransformTag::kLoxodromic: return "loxodromic";
    case TransformTag::kHyperbolic: return "hyperbolic";
    case TransformTag::kParabolic: return "parabolic";
    case TransformTag::kEllipticFinite: return "elliptic_finite";
    case TransformTag::kEllipticGeneric: return "elliptic_generic";
  }
  return "unknown";
}

int elliptic_order(double tau, double tol) {
  const long double half =
      std::clamp(std::sqrt(std::max<long double>(tau, 0.0L)) / 2.0L, 0.0L, 1.0L);
  // A matrix with |tr| = 2cos(theta) is conjugate to a rotation by theta;
  // its order modulo +-I is the reduced denominator of theta/pi.
  const long double theta = std::acos(half);
  const long double pi = std::numbers::pi_v<long double>;
  for (const auto& c : convergents(theta / pi, kMaxEllipticOrder)) {
    if (c.denominator < 2) continue;
    const long double angle = pi * static_cast<long double>(c.numerator) /
                              static_cast<long double>(c.denominator);
    const long double cand = 4.0L * std::cos(angle) * std::cos(angle);
    if (std::abs(static_cast<long double>(tau) - cand) <= tol) {
      return static_cast<int>(c.denominator);
    }
  }
  return 0;
}

TransformKind classify_trace_squared(Complex tau, double tol) {
  if (std::abs(tau - Complex(4.0, 0.0)) <= tol) {
    return {TransformTag::kParabolic, 0};
  }
  if (std::abs(tau.imag()) > tol || tau.real() < -tol) {
    return {TransformTag::kLoxodromic, 0};
  }
  if (tau.real() > 4.0) return {TransformTag::kHyperbolic, 0};
  if (int order = elliptic_order(tau.real(), tol); order >= 2) {
    return {TransformTag::kEllipticFinite, order};
  }
  return {TransformTag::kEllipticGeneric, 0};
}

template <class T>
Classification classify(const Mat2<T>& m, double tol) {
  Classification out;
  const T tau = m.trace_squared();
  out.trace_squared = ScalarTraits<T>::to_complex(tau);
  if constexpr (std::is_same_v<T, Complex>) {
    out.kind = classify_trace_squared(tau, tol);
    out.exact = false;
  } else {
    out.exact = true;
    int cmp4;
    int sign;
    if constexpr (std::is_same_v<T, Rational>) {
      cmp4 = cmp(tau, Rational(4));
      sign = sgn(tau);
    } else {
      cmp4 = (tau - AlgebraicNumber::from_rational(tau.n(), Rational(4))).sign();
      sign = tau.sign();
    }
    if (cmp4 == 0) {
      out.kind = {TransformTag::kParabolic, 0};
    } else if (cmp4 > 0) {
      out.kind = {TransformTag::kHyperbolic, 0};
    } else if (sign < 0) {
      out.kind = {TransformTag::kLoxodromic, 0};
    } else if (int order = elliptic_order(out.trace_squared.real(), tol);
               order >= 2) {
      out.kind = {TransformTag::kEllipticFinite, order};
    } else {
      out.kind = {TransformTag::kEllipticGeneric, 0};
    }
  }
  return out;
}

template Classification classify(const Mat2<Rational>&, double);
template Classification classify(const Mat2<AlgebraicNumber>&, double);
template Classification classify(const Mat2<Complex>&, double);

Classification classify(const AnyMat2& m, double tol) {
  return std::visit([tol](const auto& x) { return classify(x, tol); }, m);
}

ComplexMat2 schottky_matrix(Complex k) {
  if (k == Complex(0.0, 0.0)) throw DomainError("Schottky multiplier must be nonzero");
  if (std::abs(std::abs(k) - 1.0) <= 1e-12) {
    throw NotLoxodromicError("|k| = 1 does not define a loxodromic map");
  }
  const Complex s = std::sqrt(k);
  return ComplexMat2(s, 0.0, 0.0, 1.0 / s);
}

AnyMat2 schottky_matrix(const Rational& k) {
  if (k == 0) throw DomainError("Schottky multiplier must be nonzero");
  if (abs(k) == 1) {
    throw NotLoxodromicError("|k| = 1 does not define a loxodromic map");
  }
  if (auto s = exact_sqrt(k)) {
    return RationalMat2(*s, Rational(0), Rational(0), 1 / *s);
  }
  return schottky_matrix(Complex(to_double(k), 0.0));
}

ExtendedComplex mobius_apply(const ComplexMat2& m, ExtendedComplex z) {
  if (z.infinite) {
    if (m.c() == Complex(0.0, 0.0)) return ExtendedComplex::infinity();
    return ExtendedComplex::finite(m.a() / m.c());
  }
  const Complex den = m.c() * z.value + m.d();
  if (den == Complex(0.0, 0.0)) return ExtendedComplex::infinity();
  return ExtendedComplex::finite((m.a() * z.value + m.b()) / den);
}

double trace_squared_of_modulus(double t) {
  if (!(t > 1.0) || !std::isfinite(t)) {
    throw ModuliDomainError("annulus modulus must satisfy t > 1");
  }
  return t + 2.0 + 1.0 / t;
}

double modulus_from_trace_squared(double v) {
  if (!(v >= 4.0) || !std::isfinite(v)) {
    throw NoRealModulusError(
        "tr^2 < 4 is the elliptic regime: no real annulus modulus");
  }
  return ((v - 2.0) + std::sqrt(v * (v - 4.0))) / 2.0;
}

double jones_discrete_value(int n) {
  const double c = std::cos(std::numbers::pi / static_cast<double>(n));
  return 4.0 * c * c;
}

IndexMembership jones_admissible(double v, double tol, int n_max) {
  return classify_membership(v, 4.0, &jones_discrete_value, tol, n_max);
}

std::string jones_discrete_table_csv(int n_max) {
  if (n_max < 3) throw DomainError("n_max must be at least 3");
  std::ostringstream out;
  out.precision(12);
  out << "n,index_value,lambda\n";
  for (int n = 3; n <= n_max; ++n) {
    out << n << ',' << jones_discrete_value(n) << ','
        << 2.0 * std::cos(std::numbers::pi / n) << '\n';
  }
  return out.str();
}

}  // namespace heckeindex
