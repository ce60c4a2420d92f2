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

#include "heckeindex/membership.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "heckeindex/errors.hpp"

namespace heckeindex {

const char* branch_name(MembershipBranch branch) {
  switch (branch) {
    case MembershipBranch::kContinuous: return "continuous";
    case MembershipBranch::kDiscrete: return "discrete";
    case MembershipBranch::kNone: return "none";
  }
  return "none";
}

bool same_branch(const SetMembership& a, const SetMembership& b) {
  if (a.branch != b.branch) return false;
  return a.branch != MembershipBranch::kDiscrete || a.n == b.n;
}

SetMembership classify_membership(double value, double start,
                                  double (*point)(int), double tol,
                                  int n_max) {
  if (!std::isfinite(value)) throw DomainError("value must be finite");
  if (n_max < 3) throw DomainError("n_max must be at least 3");
  if (!(tol > 0.0)) throw ToleranceConfigError("tolerance must be positive");

  double min_gap = start - point(n_max);
  for (int n = 3; n < n_max; ++n) {
    min_gap = std::min(min_gap, point(n + 1) - point(n));
  }
  if (!(tol < 0.5 * min_gap)) {
    throw ToleranceConfigError(
        "tolerance " + std::to_string(tol) +
        " is not below half the minimal gap " + std::to_string(min_gap) +
        " for n_max = " + std::to_string(n_max));
  }

  SetMembership m;
  m.value = value;
  if (value >= start - tol) {
    m.admissible = true;
    m.branch = MembershipBranch::kContinuous;
    m.residual = std::max(0.0, start - value);
    return m;
  }
  double nearest = start - value;
  for (int n = 3; n <= n_max; ++n) {
    const double d = std::abs(value - point(n));
    if (d <= tol) {
      m.admissible = true;
      m.branch = MembershipBranch::kDiscrete;
      m.n = n;
      m.residual = d;
      return m;
    }
    nearest = std::min(nearest, d);
  }
  m.residual = nearest;
  return m;
}

}  // namespace heckeindex
