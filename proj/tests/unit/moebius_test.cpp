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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "heckeindex/continued_fraction.hpp"
#include "heckeindex/moebius.hpp"
#include "oracles.hpp"

namespace heckeindex {
namespace {

double index_point(int n) {
  const double c = std::cos(std::numbers::pi / n);
  return 4.0 * c * c;
}

TEST(Mat2, DeterminantContract) {
  EXPECT_THROW(RationalMat2(1, 1, 1, 1), InvalidMatrixError);
  EXPECT_THROW(ComplexMat2(1.0, 0.0, 0.0, 1.1), InvalidMatrixError);
  EXPECT_NO_THROW(ComplexMat2(1.0, 0.0, 0.0, 1.0 + 1e-10));
  const RationalMat2 a(2, 1, 1, 1);
  EXPECT_TRUE((a * a.inverse()).is_identity());
}

TEST(Classify, Examples) {
  const Classification h = classify(RationalMat2(2, 0, 0, Rational(1, 2)));
  EXPECT_EQ(h.kind.tag, TransformTag::kHyperbolic);
  EXPECT_EQ(h.trace_squared.real(), 6.25);
  EXPECT_TRUE(h.exact);
  const Classification s = classify(RationalMat2(0, 1, -1, 0));
  EXPECT_EQ(s.kind, (TransformKind{TransformTag::kEllipticFinite, 2}));
  EXPECT_EQ(classify(RationalMat2(1, 1, 0, 1)).kind.tag, TransformTag::kParabolic);
}

TEST(Classify, LoxodromicAndGeneric) {
  const Complex k(2.0, 1.0);
  EXPECT_EQ(classify(schottky_matrix(k)).kind.tag, TransformTag::kLoxodromic);
  // Rotation by 1 radian has irrational angle / pi.
  const double c = std::cos(0.5);
  const double s = std::sin(0.5);
  EXPECT_EQ(classify(ComplexMat2(c, -s, s, c)).kind.tag, TransformTag::kEllipticGeneric);
  EXPECT_EQ(classify_trace_squared(Complex(-1.0, 0.0), 1e-9).tag, TransformTag::kLoxodromic);
}

TEST(Classify, EllipticOrdersFromTable) {
  for (int n = 3; n <= 50; ++n) {
    const TransformKind k = classify_trace_squared(Complex(index_point(n), 0.0), 1e-9);
    EXPECT_EQ(k, (TransformKind{TransformTag::kEllipticFinite, n})) << n;
  }
  // 4cos^2(2 pi / 5): rotation by 2pi/5, order 5.
  const double c = 2.0 * std::cos(2.0 * std::numbers::pi / 5.0);
  EXPECT_EQ(elliptic_order(c * c, 1e-9), 5);
}

TEST(Classify, ExactAlgebraicEntries) {
  const AlgebraicNumber l = AlgebraicNumber::generator(7);
  const AlgebraicNumber zero = AlgebraicNumber::from_rational(7, 0);
  const AlgebraicNumber one = AlgebraicNumber::from_rational(7, 1);
  const AlgebraicMat2 st(zero, one, -one, -l);
  const Classification c = classify(st);
  EXPECT_TRUE(c.exact);
  EXPECT_EQ(c.kind, (TransformKind{TransformTag::kEllipticFinite, 7}));
}

TEST(Schottky, Examples) {
  const AnyMat2 m = schottky_matrix(Rational(4));
  ASSERT_TRUE(std::holds_alternative<RationalMat2>(m));
  const auto& r = std::get<RationalMat2>(m);
  EXPECT_EQ(r.a(), 2);
  EXPECT_EQ(r.d(), Rational(1, 2));
  EXPECT_EQ(r.trace_squared(), Rational(25, 4));
  EXPECT_THROW(schottky_matrix(Complex(std::cos(1.0), std::sin(1.0))), NotLoxodromicError);
  const AnyMat2 irrational = schottky_matrix(Rational(3));
  EXPECT_TRUE(std::holds_alternative<ComplexMat2>(irrational));
  EXPECT_NEAR(to_complex(irrational).trace_squared().real(), 16.0 / 3.0, 1e-12);
}

TEST(SchottkyProperty, RealModuliAreHyperbolic) {
  std::mt19937_64 rng(100);
  std::uniform_real_distribution<double> t(1.0 + 1e-3, 1e3);
  for (int i = 0; i < 100; ++i) {
    const double k = t(rng);
    const Classification c = classify(schottky_matrix(Complex(k, 0.0)));
    EXPECT_EQ(c.kind.tag, TransformTag::kHyperbolic) << k;
    EXPECT_NEAR(c.trace_squared.real(), (k + 1) * (k + 1) / k,
                1e-12 * (k + 1) * (k + 1) / k);
  }
}

TEST(MobiusApply, Examples) {
  const auto fin = [](double v) { return ExtendedComplex::finite({v, 0.0}); };
  EXPECT_EQ(mobius_apply(RationalMat2(2, 0, 0, Rational(1, 2)), fin(1.0)), fin(4.0));
  EXPECT_EQ(mobius_apply(RationalMat2(0, 1, -1, 0), ExtendedComplex::infinity()), fin(0.0));
  EXPECT_EQ(mobius_apply(RationalMat2(1, Rational(3, 2), 0, 1), fin(0.0)), fin(1.5));
  EXPECT_TRUE(mobius_apply(RationalMat2(0, 1, -1, 0), fin(0.0)).infinite);
  EXPECT_TRUE(mobius_apply(RationalMat2(1, 1, 0, 1), ExtendedComplex::infinity()).infinite);
}

ComplexMat2 random_sl2(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const Complex a(u(rng), u(rng));
  const Complex b(u(rng), u(rng));
  const Complex c(u(rng), u(rng));
  const Complex d = (1.0 + b * c) / a;
  return ComplexMat2(a, b, c, d);
}

TEST(MobiusProperty, ActionIsComposition) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 200; ++i) {
    const ComplexMat2 a = random_sl2(rng);
    const ComplexMat2 b = random_sl2(rng);
    const ExtendedComplex z = ExtendedComplex::finite({u(rng), u(rng)});
    const ExtendedComplex lhs = mobius_apply(a * b, z);
    const ExtendedComplex rhs = mobius_apply(a, mobius_apply(b, z));
    ASSERT_EQ(lhs.infinite, rhs.infinite);
    if (!lhs.infinite) {
      EXPECT_LE(std::abs(lhs.value - rhs.value), 1e-8 * std::max(1.0, std::abs(lhs.value)));
    }
  }
}

TEST(Modulus, TraceSquaredExamples) {
  EXPECT_DOUBLE_EQ(trace_squared_of_modulus(4.0), 6.25);
  EXPECT_NEAR(trace_squared_of_modulus(6.8541019662), 9.0, 1e-9);
  EXPECT_NEAR(trace_squared_of_modulus(1.0 + 1e-9), 4.0, 1e-9);
  EXPECT_THROW(trace_squared_of_modulus(1.0), ModuliDomainError);
  EXPECT_THROW(trace_squared_of_modulus(0.5), ModuliDomainError);
}

TEST(Modulus, InverseExamples) {
  EXPECT_NEAR(modulus_from_trace_squared(6.25), 4.0, 1e-12);
  EXPECT_DOUBLE_EQ(modulus_from_trace_squared(4.0), 1.0);
  EXPECT_NEAR(modulus_from_trace_squared(9.0), (7.0 + 3.0 * std::sqrt(5.0)) / 2.0, 1e-12);
  EXPECT_THROW(modulus_from_trace_squared(3.9), NoRealModulusError);
}

TEST(ModulusProperty, MonotoneAndRoundTrip) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> t(1.0 + 1e-6, 1e4);
  std::vector<double> ts(500);
  for (auto& v : ts) v = t(rng);
  std::sort(ts.begin(), ts.end());
  for (std::size_t i = 1; i < ts.size(); ++i) {
    EXPECT_LT(trace_squared_of_modulus(ts[i - 1]), trace_squared_of_modulus(ts[i]));
  }
  std::uniform_real_distribution<double> logv(std::log(4.0 + 1e-6), std::log(1e6));
  for (int i = 0; i < 1000; ++i) {
    const double v = std::exp(logv(rng));
    const double back = trace_squared_of_modulus(modulus_from_trace_squared(v));
    EXPECT_LE(std::abs(back - v), 1e-10 * v) << v;
  }
}

TEST(JonesAdmissible, Examples) {
  const IndexMembership one = jones_admissible(1.0);
  EXPECT_EQ(one.branch, MembershipBranch::kDiscrete);
  EXPECT_EQ(one.n, 3);
  const IndexMembership m = jones_admissible(3.5);
  EXPECT_FALSE(m.admissible);
  EXPECT_EQ(m.branch, MembershipBranch::kNone);
  EXPECT_NEAR(m.residual, oracle::distance_to_set(3.5, 4.0, index_point, 100), 1e-15);
  EXPECT_NEAR(m.residual, 0.0320888862, 1e-9);
  EXPECT_EQ(oracle::nearest_index(3.5, 4.0, index_point, 100), 9);
  EXPECT_EQ(jones_admissible((3.0 + std::sqrt(5.0)) / 2.0).n, 5);
  EXPECT_EQ(jones_admissible(4.0).branch, MembershipBranch::kContinuous);
  EXPECT_EQ(jones_admissible(4.0 - 5e-10).branch, MembershipBranch::kContinuous);
  EXPECT_THROW(jones_admissible(3.0, 1e-3), ToleranceConfigError);
}

TEST(JonesAdmissibleProperty, TableAndOrdering) {
  for (int n = 3; n <= 50; ++n) {
    const IndexMembership m = jones_admissible(index_point(n));
    EXPECT_EQ(m.branch, MembershipBranch::kDiscrete);
    EXPECT_EQ(m.n, n);
    EXPECT_LT(jones_discrete_value(n), 4.0);
    if (n > 3) EXPECT_LT(jones_discrete_value(n - 1), jones_discrete_value(n));
  }
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> v(0.0, 6.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = v(rng);
    const IndexMembership m = jones_admissible(x);
    if (!m.admissible) {
      EXPECT_NEAR(m.residual, oracle::distance_to_set(x, 4.0, index_point, 100), 1e-15);
    }
  }
}

TEST(JonesTable, Csv) {
  const std::string csv = jones_discrete_table_csv(4);
  EXPECT_EQ(csv, "n,index_value,lambda\n3,1,1\n4,2,1.41421356237\n");
}

TEST(ContinuedFraction, Convergents) {
  const auto c = convergents(std::numbers::pi_v<long double>, 1000);
  ASSERT_GE(c.size(), 4u);
  EXPECT_EQ(c[1].numerator, 22);
  EXPECT_EQ(c[1].denominator, 7);
  EXPECT_EQ(c[3].numerator, 355);
  EXPECT_EQ(c[3].denominator, 113);
  const auto r = convergents(0.4L, 100);
  EXPECT_EQ(r.back().numerator, 2);
  EXPECT_EQ(r.back().denominator, 5);
}

}  // namespace
}  // namespace heckeindex
