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

#include "heckeindex/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace heckeindex {
namespace {

long total_degree(const Exponent& e) {
  return std::accumulate(e.begin(), e.end(), 0L);
}

Exponent add_exponents(const Exponent& a, const Exponent& b) {
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Exponent sub_exponents(const Exponent& a, const Exponent& b) {
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

bool dominates(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
  }
  return true;
}

LaurentPoly shifted(const LaurentPoly& p, const Exponent& by) {
  LaurentPoly out(p.variables());
  for (const auto& [e, c] : p.terms()) out.add_term(add_exponents(e, by), c);
  return out;
}

Exponent negated(const Exponent& e) {
  Exponent out(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) out[i] = -e[i];
  return out;
}

}  // namespace

bool GradedLexLess::operator()(const Exponent& a, const Exponent& b) const {
  const long da = total_degree(a);
  const long db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

LaurentPoly::LaurentPoly(std::vector<std::string> variables)
    : vars_(std::move(variables)) {}

LaurentPoly LaurentPoly::constant(std::vector<std::string> variables,
                                  const Integer& value) {
  const std::size_t n = variables.size();
  return monomial(std::move(variables), Exponent(n, 0), value);
}

LaurentPoly LaurentPoly::variable(std::vector<std::string> variables,
                                  int index) {
  if (index < 0 || index >= static_cast<int>(variables.size())) {
    throw DomainError("variable index out of range");
  }
  Exponent e(variables.size(), 0);
  e[static_cast<std::size_t>(index)] = 1;
  return monomial(std::move(variables), std::move(e), Integer(1));
}

LaurentPoly LaurentPoly::monomial(std::vector<std::string> variables,
                                  Exponent exponent,
                                  const Integer& coefficient) {
  LaurentPoly p(std::move(variables));
  p.add_term(exponent, coefficient);
  return p;
}

void LaurentPoly::add_term(const Exponent& exponent,
                           const Integer& coefficient) {
  if (exponent.size() != vars_.size()) {
    throw DomainError("exponent vector length does not match variables");
  }
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::require_same_variables(const LaurentPoly& other) const {
  if (vars_ != other.vars_) {
    throw DomainError("Laurent polynomials over different variable lists");
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
  require_same_variables(other);
  LaurentPoly out = *this;
  for (const auto& [e, c] : other.terms_) out.add_term(e, c);
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const {
  return *this + (-other);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
  require_same_variables(other);
  LaurentPoly out(vars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      out.add_term(add_exponents(ea, eb), ca * cb);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned exponent) const {
  LaurentPoly result = constant(vars_, Integer(1));
  LaurentPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::strong_ordering LaurentPoly::compare(const LaurentPoly& other) const {
  if (auto c = vars_ <=> other.vars_; c != 0) return c;
  auto a = terms_.rbegin();
  auto b = other.terms_.rbegin();
  const GradedLexLess less;
  for (; a != terms_.rend() && b != other.terms_.rend(); ++a, ++b) {
    if (less(a->first, b->first)) return std::strong_ordering::less;
    if (less(b->first, a->first)) return std::strong_ordering::greater;
    const int c = cmp(a->second, b->second);
    if (c != 0) return c < 0 ? std::strong_ordering::less
                             : std::strong_ordering::greater;
  }
  return terms_.size() <=> other.terms_.size();
}

Exponent LaurentPoly::min_exponent() const {
  Exponent out(vars_.size(), 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      out[i] = first ? e[i] : std::min(out[i], e[i]);
    }
    first = false;
  }
  return out;
}

Rational LaurentPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != vars_.size()) {
    throw DomainError("evaluation point has the wrong dimension");
  }
  Rational total(0);
  for (const auto& [e, c] : terms_) {
    Rational term(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (point[i] == 0 && e[i] < 0) {
        throw Error(ErrorKind::kArithmetic, "negative power of zero");
      }
      Rational base = e[i] > 0 ? point[i] : 1 / point[i];
      for (int k = 0; k < std::abs(e[i]); ++k) term *= base;
    }
    total += term;
  }
  return total;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const Integer mag = abs(c);
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      std::string f = vars_[i];
      if (e[i] != 1) f += "^" + std::to_string(e[i]);
      factors.push_back(std::move(f));
    }
    if (factors.empty()) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i > 0) out << "*";
      out << factors[i];
    }
  }
  return out.str();
}

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.variables() != q.variables()) {
    throw DomainError("Laurent polynomials over different variable lists");
  }
  if (q.is_zero()) throw Error(ErrorKind::kArithmetic, "division by zero");
  if (p.is_zero()) return LaurentPoly(p.variables());

  // Clear monomial factors so both sides are polynomials not divisible by any
  // variable; Laurent divisibility then coincides with divisibility in Z[x].
  const Exponent mp = p.min_exponent();
  const Exponent mq = q.min_exponent();
  const LaurentPoly num = shifted(p, negated(mp));
  const LaurentPoly den = shifted(q, negated(mq));

  const auto& [lead_e, lead_c] = *den.terms().rbegin();
  LaurentPoly::TermMap work = num.terms();
  LaurentPoly quotient(p.variables());
  LaurentPoly remainder(p.variables());
  while (!work.empty()) {
    auto top = std::prev(work.end());
    const Exponent e = top->first;
    const Integer c = top->second;
    if (dominates(e, lead_e) && mpz_divisible_p(c.get_mpz_t(), lead_c.get_mpz_t())) {
      const Exponent shift = sub_exponents(e, lead_e);
      const Integer factor = c / lead_c;
      quotient.add_term(shift, factor);
      for (const auto& [de, dc] : den.terms()) {
        const Exponent target = add_exponents(de, shift);
        auto [it, inserted] = work.try_emplace(target, Integer(0));
        it->second -= factor * dc;
        if (it->second == 0) work.erase(it);
      }
    } else {
      remainder.add_term(e, c);
      work.erase(top);
    }
  }
  if (!remainder.is_zero()) {
    LaurentPoly rem = shifted(remainder, mp);
    throw DivisibilityError("'" + q.to_string() + "' does not divide '" +
                                p.to_string() + "'; remainder " + rem.to_string(),
                            std::move(rem));
  }
  return shifted(quotient, sub_exponents(mp, mq));
}

LaurentPoly laurent_arith(const LaurentPoly& p, const LaurentPoly& q,
                          LaurentOp op) {
  switch (op) {
    case LaurentOp::kAdd: return p + q;
    case LaurentOp::kMul: return p * q;
    case LaurentOp::kExactDiv: return exact_div(p, q);
  }
  throw Error(ErrorKind::kInternal, "unknown Laurent op");
}

bool is_positive(const LaurentPoly& p) {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [](const auto& term) { return term.second > 0; });
}

std::vector<std::string> standard_variables(int n) {
  std::vector<std::string> vars;
  vars.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
  return vars;
}

}  // namespace heckeindex
