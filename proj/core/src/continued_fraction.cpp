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

#include "heckeindex/continued_fraction.hpp"

#include <cmath>

#include "heckeindex/errors.hpp"

namespace heckeindex {

std::vector<Convergent> convergents(long double x,
                                    std::int64_t max_denominator) {
  if (!(x >= 0) || !std::isfinite(x)) {
    throw DomainError("continued fraction expects a finite x >= 0");
  }
  std::vector<Convergent> out;
  std::int64_t p_prev = 1, q_prev = 0;  // p_{-1}/q_{-1}
  std::int64_t p_prev2 = 0, q_prev2 = 1;  // p_{-2}/q_{-2}
  long double y = x;
  for (int iter = 0; iter < 64; ++iter) {
    const long double a_ld = std::floor(y);
    if (a_ld > 4e18L) break;
    const auto a = static_cast<std::int64_t>(a_ld);
    // Overflow-safe a * q_prev + q_prev2 <= max_denominator.
    if (q_prev != 0 && a > (max_denominator - q_prev2) / q_prev) break;
    const std::int64_t p = a * p_prev + p_prev2;
    const std::int64_t q = a * q_prev + q_prev2;
    if (q > max_denominator) break;
    out.push_back({p, q});
    p_prev2 = p_prev;
    q_prev2 = q_prev;
    p_prev = p;
    q_prev = q;
    const long double frac = y - a_ld;
    if (std::abs(x - static_cast<long double>(p) / static_cast<long double>(q)) <=
        1e-15L * std::max(1.0L, x)) {
      break;
    }
    if (frac <= 0) break;
    y = 1.0L / frac;
  }
  return out;
}

}  // namespace heckeindex
