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

#include "heckeindex/qpoly.hpp"

#include <sstream>

#include "heckeindex/errors.hpp"

namespace heckeindex {

QPoly::QPoly(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

QPoly::QPoly(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

QPoly QPoly::constant(const Rational& c) { return QPoly(std::vector{c}); }

QPoly QPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = c;
  return QPoly(std::move(coeffs));
}

Rational QPoly::coefficient(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

bool QPoly::is_monic() const { return !is_zero() && leading() == 1; }

bool QPoly::is_integral() const {
  for (const auto& c : coeffs_) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QPoly QPoly::operator+(const QPoly& other) const {
  std::vector<Rational> out(std::max(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < coeffs_.size()) out[i] += coeffs_[i];
    if (i < other.coeffs_.size()) out[i] += other.coeffs_[i];
  }
  return QPoly(std::move(out));
}

QPoly QPoly::operator-(const QPoly& other) const { return *this + (-other); }

QPoly QPoly::operator*(const QPoly& other) const {
  if (is_zero() || other.is_zero()) return QPoly();
  std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  return QPoly(std::move(out));
}

QPoly QPoly::operator*(const Rational& scalar) const {
  if (scalar == 0) return QPoly();
  QPoly r = *this;
  for (auto& c : r.coeffs_) c *= scalar;
  return r;
}

QPoly QPoly::derivative() const {
  if (degree() < 1) return QPoly();
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out[i - 1] = coeffs_[i] * static_cast<long>(i);
  }
  return QPoly(std::move(out));
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading();
  return *this * inv;
}

long double QPoly::evaluate(long double x) const {
  long double acc = 0.0L;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const long double num = it->get_num().get_d();
    const long double den = it->get_den().get_d();
    acc = acc * x + num / den;
  }
  return acc;
}

Rational QPoly::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

std::string QPoly::to_string(const std::string& variable) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << variable;
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

std::pair<QPoly, QPoly> divmod(const QPoly& numerator, const QPoly& divisor) {
  if (divisor.is_zero()) {
    throw Error(ErrorKind::kArithmetic, "polynomial division by zero");
  }
  std::vector<Rational> rem = numerator.coefficients();
  const int dd = divisor.degree();
  if (numerator.degree() < dd) return {QPoly(), numerator};
  std::vector<Rational> quot(static_cast<std::size_t>(numerator.degree() - dd) + 1);
  const Rational lead_inv = 1 / divisor.leading();
  for (int i = numerator.degree(); i >= dd; --i) {
    const Rational factor = rem[static_cast<std::size_t>(i)] * lead_inv;
    if (factor == 0) continue;
    quot[static_cast<std::size_t>(i - dd)] = factor;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(i - dd + j)] -=
          factor * divisor.coefficients()[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a;
  QPoly y = b;
  while (!y.is_zero()) {
    QPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

QPoly inverse_mod(const QPoly& a, const QPoly& modulus) {
  // Extended Euclid tracking only the coefficient of a.
  QPoly r0 = modulus;
  QPoly r1 = divmod(a, modulus).second;
  QPoly s0;
  QPoly s1 = QPoly::constant(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    QPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) {
    throw Error(ErrorKind::kArithmetic, "element is not invertible");
  }
  return divmod(s0 * (1 / r0.leading()), modulus).second;
}

}  // namespace heckeindex
