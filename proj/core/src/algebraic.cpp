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

#include "heckeindex/algebraic.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <mutex>
#include <numbers>
#include <set>

#include "heckeindex/errors.hpp"

namespace heckeindex {
namespace {

// U_k(2cos t) = sin((k+1)t)/sin t
QPoly chebyshev_u(int k) {
  QPoly prev = QPoly{1};
  if (k == 0) return prev;
  QPoly cur = QPoly::x();
  for (int i = 1; i < k; ++i) {
    QPoly next = QPoly::x() * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// W_k(2cos t) = sin((2k+1)t/2)/sin(t/2)
QPoly chebyshev_w(int k) {
  QPoly prev = QPoly{1};
  if (k == 0) return prev;
  QPoly cur = QPoly{1, 1};
  for (int i = 1; i < k; ++i) {
    QPoly next = QPoly::x() * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// D_m(2cos t) = 2cos(mt)
QPoly dickson(int m) {
  QPoly prev = QPoly{2};
  if (m == 0) return prev;
  QPoly cur = QPoly::x();
  for (int i = 1; i < m; ++i) {
    QPoly next = QPoly::x() * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

QPoly exact_quotient(const QPoly& num, const QPoly& den, const char* what) {
  auto [q, r] = divmod(num, den);
  if (!r.is_zero()) {
    throw Error(ErrorKind::kInternal, std::string("inexact division: ") + what);
  }
  return q;
}

// Product of (x - 2cos(2 pi k / m)) over distinct values, 0 <= k <= m/2.
QPoly distinct_cosine_product(int m) {
  const QPoly shifted = dickson(m) - QPoly{2};
  if (m % 2 == 1) {
    const QPoly w = chebyshev_w((m - 1) / 2);
    const QPoly linear = QPoly{-2, 1};
    if (!(linear * w * w == shifted)) {
      throw Error(ErrorKind::kInternal, "Chebyshev factorization failed");
    }
    return linear * w;
  }
  const QPoly u = chebyshev_u(m / 2 - 1);
  const QPoly quadratic = QPoly{-4, 0, 1};
  if (!(quadratic * u * u == shifted)) {
    throw Error(ErrorKind::kInternal, "Chebyshev factorization failed");
  }
  return quadratic * u;
}

// Minimal polynomial of 2cos(2 pi / m).
QPoly primitive_cosine_poly(int m) {
  static std::mutex mutex;
  static std::map<int, QPoly> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  QPoly result;
  if (m == 1) {
    result = QPoly{-2, 1};
  } else if (m == 2) {
    result = QPoly{2, 1};
  } else {
    result = distinct_cosine_product(m);
    for (int d = 1; d < m; ++d) {
      if (m % d != 0) continue;
      result = exact_quotient(result, primitive_cosine_poly(d),
                              "primitive cosine factor");
    }
  }
  std::lock_guard lock(mutex);
  return cache.emplace(m, result).first->second;
}

// --- arithmetic in F_p[x], coefficients lowest first ---------------------

using ModPoly = std::vector<std::uint64_t>;

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  return pow_mod(a, p - 2, p);
}

ModPoly mod_reduce(const ModPoly& a, const ModPoly& m, std::uint64_t p) {
  ModPoly r = a;
  trim(r);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = inv_mod(m.back(), p);
  while (r.size() >= m.size()) {
    const std::uint64_t f = r.back() * lead_inv % p;
    const std::size_t shift = r.size() - m.size();
    for (std::size_t j = 0; j <= dm; ++j) {
      r[shift + j] = (r[shift + j] + p - f * m[j] % p) % p;
    }
    trim(r);
  }
  return r;
}

ModPoly mod_mul(const ModPoly& a, const ModPoly& b, const ModPoly& m,
                std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
  }
  return mod_reduce(out, m, p);
}

ModPoly mod_pow_x(std::uint64_t e, const ModPoly& m, std::uint64_t p,
                  const ModPoly& base) {
  ModPoly result = mod_reduce(ModPoly{1}, m, p);
  ModPoly b = base;
  while (e > 0) {
    if (e & 1) result = mod_mul(result, b, m, p);
    b = mod_mul(b, b, m, p);
    e >>= 1;
  }
  return result;
}

ModPoly mod_gcd(ModPoly a, ModPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    ModPoly r = mod_reduce(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint64_t inv = inv_mod(a.back(), p);
    for (auto& c : a) c = c * inv % p;
  }
  return a;
}

ModPoly mod_div(const ModPoly& a, const ModPoly& b, std::uint64_t p) {
  ModPoly r = a;
  trim(r);
  ModPoly q(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, 0);
  const std::uint64_t lead_inv = inv_mod(b.back(), p);
  while (r.size() >= b.size() && !r.empty()) {
    const std::uint64_t f = r.back() * lead_inv % p;
    const std::size_t shift = r.size() - b.size();
    q[shift] = f;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[shift + j] = (r[shift + j] + p - f * b[j] % p) % p;
    }
    trim(r);
  }
  return q;
}

ModPoly sub_poly(ModPoly a, const ModPoly& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

// Degrees of the irreducible factors of f mod p, or nothing if f is not
// squarefree mod p.
std::optional<std::vector<int>> factor_degrees_mod_p(const QPoly& f,
                                                     std::uint64_t p) {
  ModPoly fp;
  for (const auto& c : f.coefficients()) {
    Integer r = c.get_num() % static_cast<unsigned long>(p);
    if (r < 0) r += static_cast<unsigned long>(p);
    fp.push_back(r.get_ui());
  }
  trim(fp);
  if (fp.size() != f.coefficients().size()) return std::nullopt;
  ModPoly deriv;
  for (std::size_t i = 1; i < fp.size(); ++i) deriv.push_back(fp[i] * i % p);
  trim(deriv);
  if (mod_gcd(fp, deriv, p).size() != 1) return std::nullopt;

  std::vector<int> degrees;
  ModPoly rest = fp;
  const ModPoly x{0, 1};
  ModPoly h = mod_reduce(x, rest, p);
  for (int i = 1; 2 * i <= static_cast<int>(rest.size()) - 1; ++i) {
    h = mod_pow_x(p, rest, p, h);
    ModPoly g = mod_gcd(rest, sub_poly(h, x, p), p);
    const int dg = static_cast<int>(g.size()) - 1;
    if (dg > 0) {
      for (int k = 0; k < dg / i; ++k) degrees.push_back(i);
      rest = mod_div(rest, g, p);
      h = mod_reduce(h, rest, p);
    }
  }
  if (rest.size() > 1) degrees.push_back(static_cast<int>(rest.size()) - 1);
  return degrees;
}

std::set<int> subset_sums(const std::vector<int>& parts) {
  std::set<int> sums{0};
  for (int part : parts) {
    std::set<int> next = sums;
    for (int s : sums) next.insert(s + part);
    sums = std::move(next);
  }
  return sums;
}

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

using CLD = std::complex<long double>;

// Durand-Kerner with a Newton polish.
std::vector<CLD> numerical_roots(const QPoly& f) {
  const int d = f.degree();
  std::vector<CLD> coeffs;
  for (const auto& c : f.coefficients()) {
    coeffs.emplace_back(static_cast<long double>(c.get_d()), 0.0L);
  }
  auto eval = [&](CLD z) {
    CLD acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
  };
  auto eval_deriv = [&](CLD z) {
    CLD acc = 0;
    for (int i = d; i >= 1; --i) acc = acc * z + coeffs[i] * static_cast<long double>(i);
    return acc;
  };
  long double bound = 1.0L;
  for (int i = 0; i < d; ++i) bound = std::max(bound, 1.0L + std::abs(coeffs[i]));
  // Iterate in double, polish in long double below.
  using CD = std::complex<double>;
  std::vector<CD> dcoeffs;
  for (const auto& c : coeffs) dcoeffs.emplace_back(static_cast<double>(c.real()), 0.0);
  auto deval = [&](CD v) {
    CD acc = 0;
    for (auto it = dcoeffs.rbegin(); it != dcoeffs.rend(); ++it) acc = acc * v + *it;
    return acc;
  };
  std::vector<CD> w(static_cast<std::size_t>(d));
  const CD seed(0.4, 0.9);
  CD step = 1;
  for (int i = 0; i < d; ++i) {
    w[i] = step * static_cast<double>(std::min(bound, 2.5L));
    step *= seed;
  }
  for (int iter = 0; iter < 2000; ++iter) {
    double change = 0;
    for (int i = 0; i < d; ++i) {
      CD denom = 1;
      for (int j = 0; j < d; ++j) {
        if (j != i) denom *= (w[i] - w[j]);
      }
      if (std::abs(denom) == 0) denom = 1e-300;
      const CD delta = deval(w[i]) / denom;
      w[i] -= delta;
      change = std::max(change, std::abs(delta));
    }
    if (change < 1e-14) break;
  }
  std::vector<CLD> z;
  for (const auto& v : w) z.emplace_back(v.real(), v.imag());
  for (auto& r : z) {
    for (int k = 0; k < 5; ++k) {
      const CLD dv = eval_deriv(r);
      if (std::abs(dv) == 0) break;
      r -= eval(r) / dv;
    }
  }
  return z;
}

// Any proper factor among root subsets whose size lies in `sizes`.
bool has_factor_from_roots(const QPoly& f, const std::vector<CLD>& roots,
                           const std::set<int>& sizes) {
  const int d = static_cast<int>(roots.size());
  std::vector<int> chosen;
  bool found = false;

  auto integral_candidate = [&](const std::vector<CLD>& prod) -> std::optional<QPoly> {
    std::vector<Rational> coeffs;
    for (const auto& c : prod) {
      const long double re = c.real();
      const long double nearest = std::round(re);
      const long double scale = 1.0L + std::abs(re);
      if (std::abs(c.imag()) > 1e-6L * scale) return std::nullopt;
      if (std::abs(re - nearest) > 1e-6L * scale) return std::nullopt;
      coeffs.emplace_back(Integer(std::to_string(static_cast<long long>(nearest))));
    }
    return QPoly(std::move(coeffs));
  };

  using CD = std::complex<double>;
  auto near_integer = [](CD v) {
    const double scale = 1.0 + std::abs(v.real());
    return std::abs(v.imag()) <= 1e-6 * scale &&
           std::abs(v.real() - std::floor(v.real() + 0.5)) <= 1e-6 * scale;
  };

  // Depth-first over increasing index subsets. The power sums of a factor's
  // roots are integers, which prunes almost every subset before any product
  // is formed.
  constexpr int kSums = 4;
  using Sums = std::array<CD, kSums>;
  std::vector<Sums> powers(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    CLD p = roots[i];
    for (int s = 0; s < kSums; ++s, p *= roots[i]) {
      powers[i][s] = CD(static_cast<double>(p.real()), static_cast<double>(p.imag()));
    }
  }
  const int max_size = *sizes.rbegin();
  const int min_size = *sizes.begin();
  std::vector<char> target(static_cast<std::size_t>(d + 1), 0);
  for (int k : sizes) target[k] = 1;
  // With only the half degree left, one of the two cofactors holds root 0.
  const bool fix_first = 2 * min_size == d;
  auto recurse = [&](auto&& self, int start, const Sums& sums) -> void {
    if (found) return;
    const int k = static_cast<int>(chosen.size());
    if (k > 0 && target[k] &&
        std::all_of(sums.begin(), sums.end(), near_integer)) {
      std::vector<CLD> prod{CLD(1)};
      for (int i : chosen) {
        std::vector<CLD> next(prod.size() + 1, CLD(0));
        for (std::size_t j = 0; j < prod.size(); ++j) {
          next[j + 1] += prod[j];
          next[j] -= prod[j] * roots[i];
        }
        prod = std::move(next);
      }
      if (auto cand = integral_candidate(prod)) {
        if (cand->degree() == k && divmod(f, *cand).second.is_zero()) {
          found = true;
          return;
        }
      }
    }
    if (k >= max_size || k + (d - start) < min_size) return;
    const int end = (fix_first && k == 0) ? 1 : d;
    for (int i = start; i < end && !found; ++i) {
      Sums next = sums;
      for (int s = 0; s < kSums; ++s) next[s] += powers[i][s];
      chosen.push_back(i);
      self(self, i + 1, next);
      chosen.pop_back();
    }
  };
  recurse(recurse, 0, Sums{});
  return found;
}

}  // namespace

QPoly minimal_polynomial_2cos(int n) {
  if (n < 3) {
    throw DomainError("minimal_polynomial_2cos requires n >= 3, got " +
                      std::to_string(n));
  }
  return primitive_cosine_poly(2 * n);
}

bool is_irreducible_over_q(const QPoly& f) {
  if (!f.is_monic() || !f.is_integral()) {
    throw DomainError("irreducibility check expects a monic integer polynomial");
  }
  const int d = f.degree();
  if (d <= 1) return d == 1;

  // Possible degrees of a proper factor, pruned by factorization mod p.
  std::set<int> possible;
  for (int k = 1; k <= d / 2; ++k) possible.insert(k);
  int primes_used = 0;
  for (std::uint64_t p = 3; p < 2000 && primes_used < 40; p += 2) {
    if (!is_prime(p)) continue;
    auto degrees = factor_degrees_mod_p(f, p);
    if (!degrees) continue;
    ++primes_used;
    const std::set<int> sums = subset_sums(*degrees);
    std::set<int> kept;
    for (int k : possible) {
      if (sums.count(k)) kept.insert(k);
    }
    possible = std::move(kept);
    if (possible.empty()) return true;
  }
  if (d > 24) {
    throw DomainError("degree " + std::to_string(d) +
                      " needs the root-subset stage, limited to degree <= 24");
  }
  return !has_factor_from_roots(f, numerical_roots(f), possible);
}

AlgebraicField::AlgebraicField(int n, QPoly modulus, bool verified)
    : n_(n),
      modulus_(std::move(modulus)),
      generator_value_(2.0L * std::cos(std::numbers::pi_v<long double> /
                                       static_cast<long double>(n))),
      irreducibility_verified_(verified) {}

std::shared_ptr<const AlgebraicField> AlgebraicField::get(int n) {
  if (n < 3) {
    throw DomainError("Q(2cos(pi/n)) requires n >= 3, got " + std::to_string(n));
  }
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const AlgebraicField>> fields;
  {
    std::lock_guard lock(mutex);
    if (auto it = fields.find(n); it != fields.end()) return it->second;
  }
  QPoly modulus = minimal_polynomial_2cos(n);
  bool verified = false;
  if (n <= kExactTableBound) {
    if (!is_irreducible_over_q(modulus)) {
      throw Error(ErrorKind::kInternal,
                  "minimal polynomial for n=" + std::to_string(n) +
                      " failed the irreducibility check");
    }
    verified = true;
  }
  auto field = std::make_shared<const AlgebraicField>(n, std::move(modulus), verified);
  std::lock_guard lock(mutex);
  return fields.emplace(n, std::move(field)).first->second;
}

AlgebraicNumber::AlgebraicNumber(std::shared_ptr<const AlgebraicField> field,
                                 QPoly residue)
    : field_(std::move(field)) {
  if (!field_) throw DomainError("algebraic number without a field");
  residue_ = residue.degree() >= field_->degree()
                 ? divmod(residue, field_->modulus()).second
                 : std::move(residue);
}

AlgebraicNumber AlgebraicNumber::generator(int n) {
  return AlgebraicNumber(AlgebraicField::get(n), QPoly::x());
}

AlgebraicNumber AlgebraicNumber::from_rational(int n, const Rational& value) {
  return AlgebraicNumber(AlgebraicField::get(n), QPoly::constant(value));
}

long double AlgebraicNumber::to_long_double() const {
  return residue_.evaluate(field_->generator_value());
}

double AlgebraicNumber::to_double() const {
  return static_cast<double>(to_long_double());
}

int AlgebraicNumber::sign() const {
  if (is_zero()) return 0;
  if (is_rational()) return sgn(residue_.coefficient(0));
  return to_long_double() > 0 ? 1 : -1;
}

void AlgebraicNumber::require_same_field(const AlgebraicNumber& other) const {
  if (n() != other.n()) {
    throw Error(ErrorKind::kIncompatibleField,
                "operands live in Q(2cos(pi/" + std::to_string(n()) +
                    ")) and Q(2cos(pi/" + std::to_string(other.n()) + "))");
  }
}

AlgebraicNumber AlgebraicNumber::operator-() const {
  return AlgebraicNumber(field_, -residue_);
}

AlgebraicNumber AlgebraicNumber::operator+(const AlgebraicNumber& other) const {
  require_same_field(other);
  return AlgebraicNumber(field_, residue_ + other.residue_);
}

AlgebraicNumber AlgebraicNumber::operator-(const AlgebraicNumber& other) const {
  require_same_field(other);
  return AlgebraicNumber(field_, residue_ - other.residue_);
}

AlgebraicNumber AlgebraicNumber::operator*(const AlgebraicNumber& other) const {
  require_same_field(other);
  return AlgebraicNumber(field_, residue_ * other.residue_);
}

AlgebraicNumber AlgebraicNumber::inverse() const {
  if (is_zero()) throw Error(ErrorKind::kArithmetic, "division by zero");
  return AlgebraicNumber(field_, inverse_mod(residue_, field_->modulus()));
}

AlgebraicNumber AlgebraicNumber::operator/(const AlgebraicNumber& other) const {
  require_same_field(other);
  return *this * other.inverse();
}

bool AlgebraicNumber::operator==(const AlgebraicNumber& other) const {
  return n() == other.n() && residue_ == other.residue_;
}

std::string AlgebraicNumber::to_string() const { return residue_.to_string("L"); }

AlgebraicNumber algebraic_arith(const AlgebraicNumber& a,
                                const AlgebraicNumber& b, ArithOp op) {
  switch (op) {
    case ArithOp::kAdd: return a + b;
    case ArithOp::kSub: return a - b;
    case ArithOp::kMul: return a * b;
    case ArithOp::kDiv: return a / b;
  }
  throw Error(ErrorKind::kInternal, "unknown arithmetic op");
}

AlgebraicNumber parse_algebraic(int n, std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  auto fail = [&]() -> Error {
    return Error(ErrorKind::kParse, "cannot parse algebraic value '" +
                                        std::string(text) + "'");
  };
  if (s.empty()) throw fail();

  QPoly total;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw fail();
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') {
      if (s[end] == '^' && end + 1 < s.size() && s[end + 1] == '-') throw fail();
      ++end;
    }
    const std::string term = s.substr(pos, end - pos);
    if (term.empty()) throw fail();
    Rational coeff(1);
    int degree = 0;
    const auto l = term.find('L');
    if (l == std::string::npos) {
      auto r = parse_rational(term);
      if (!r) throw fail();
      coeff = *r;
    } else {
      std::string head = term.substr(0, l);
      const std::string tail = term.substr(l + 1);
      if (!head.empty()) {
        if (head.back() != '*') throw fail();
        head.pop_back();
        auto r = parse_rational(head);
        if (!r) throw fail();
        coeff = *r;
      }
      degree = 1;
      if (!tail.empty()) {
        if (tail[0] != '^') throw fail();
        auto e = parse_integer(tail.substr(1));
        if (!e || *e < 0 || *e > 1000) throw fail();
        degree = static_cast<int>(e->get_si());
      }
    }
    total = total + QPoly::monomial(coeff * sign, degree);
    pos = end;
  }
  return AlgebraicNumber(AlgebraicField::get(n), total);
}

}  // namespace heckeindex
