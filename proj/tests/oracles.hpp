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

// Reference computations that share no code with the library.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

// Coefficients (lowest first) of prod (x - 2cos(k pi / n)) over odd k < n
// coprime to 2n, from floating roots rounded to integers.
inline std::vector<long long> cosine_min_poly(int n) {
  std::vector<long double> c{1.0L};
  for (int k = 1; k < n; k += 2) {
    if (std::gcd(k, 2 * n) != 1) continue;
    const long double r =
        2.0L * std::cos(std::numbers::pi_v<long double> * k / n);
    std::vector<long double> next(c.size() + 1, 0.0L);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  std::vector<long long> out;
  for (long double v : c) out.push_back(std::llround(v));
  return out;
}

// x_{m+1} = (x_m^2 + 1) / x_{m-1} from (x1, x2), `steps` terms each way.
// Returned map is keyed by index m; x1 and x2 sit at m = 1, 2.
inline std::map<int, mpq_class> kronecker_sequence(const mpq_class& x1,
                                                   const mpq_class& x2,
                                                   int steps) {
  std::map<int, mpq_class> seq{{1, x1}, {2, x2}};
  for (int m = 2; m < 2 + steps; ++m) {
    seq[m + 1] = (seq[m] * seq[m] + 1) / seq[m - 1];
  }
  for (int m = 1; m > 1 - steps; --m) {
    seq[m - 1] = (seq[m] * seq[m] + 1) / seq[m + 1];
  }
  return seq;
}

// Values of the A2 recurrence x_{m+1} = (x_m + 1) / x_{m-1}, iterated until
// it repeats; returns the distinct values.
inline std::set<mpq_class> a2_orbit(const mpq_class& x1, const mpq_class& x2) {
  std::set<mpq_class> seen{x1, x2};
  mpq_class prev = x1;
  mpq_class cur = x2;
  for (int i = 0; i < 20; ++i) {
    mpq_class next = (cur + 1) / prev;
    seen.insert(next);
    prev = cur;
    cur = next;
  }
  return seen;
}

// Distance from v to {f(n) : 3 <= n <= n_max} U [start, inf).
template <class F>
double distance_to_set(double v, double start, F f, int n_max) {
  double best = v >= start ? 0.0 : start - v;
  for (int n = 3; n <= n_max; ++n) best = std::min(best, std::abs(v - f(n)));
  return best;
}

// Index n of the nearest discrete point, or 0 when [start, inf) is nearer.
template <class F>
int nearest_index(double v, double start, F f, int n_max) {
  double best = v >= start ? 0.0 : start - v;
  int arg = 0;
  for (int n = 3; n <= n_max; ++n) {
    if (std::abs(v - f(n)) < best) {
      best = std::abs(v - f(n));
      arg = n;
    }
  }
  return arg;
}

using IntMat = std::array<long long, 4>;

inline IntMat mul(const IntMat& x, const IntMat& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
          x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

inline IntMat int_power(IntMat base, int e) {
  IntMat r{1, 0, 0, 1};
  for (int i = 0; i < e; ++i) r = mul(r, base);
  return r;
}

// Distance of (S T)^m to +-I from the closed form in sines of the
// rotation angle, independent of matrix products.
inline double power_distance(double lambda, long long m) {
  // (S T) = [[0, 1], [-1, -lambda]], rotation by theta with 2cos(theta) = -lambda.
  const long double theta = std::acos(-static_cast<long double>(lambda) / 2.0L);
  // (S T)^m = (sin(m th) M - sin((m-1) th) I) / sin(th) with M = S T.
  const long double s = std::sin(theta);
  const long double a = std::sin(m * theta) / s;
  const long double b = std::sin((m - 1) * theta) / s;
  const long double e00 = -b;
  const long double e01 = a;
  const long double e10 = -a;
  const long double e11 = -a * lambda - b;
  auto frob = [&](long double sign) {
    return std::sqrt((e00 - sign) * (e00 - sign) + e01 * e01 + e10 * e10 +
                     (e11 - sign) * (e11 - sign));
  };
  return static_cast<double>(std::min(frob(1.0L), frob(-1.0L)));
}

}  // namespace oracle
