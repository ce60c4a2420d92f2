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

#include <string>

namespace heckeindex {

enum class MembershipBranch { kContinuous, kDiscrete, kNone };

const char* branch_name(MembershipBranch branch);

/// Membership of a value in a set of the form [c, inf) U {f(n) : n >= 3}.
/// Used at the index level (c = 4, f = 4cos^2(pi/n)) and at the lambda level
/// (c = 2, f = 2cos(pi/n)).
struct SetMembership {
  double value = 0.0;
  bool admissible = false;
  MembershipBranch branch = MembershipBranch::kNone;
  int n = 0;  // set for kDiscrete only
  double residual = 0.0;

  bool operator==(const SetMembership&) const = default;
};

using IndexMembership = SetMembership;
using LambdaMembership = SetMembership;

// Same branch, and the same n on the discrete branch.
bool same_branch(const SetMembership& a, const SetMembership& b);

/// Membership in [start, inf) U {point(n) : 3 <= n <= n_max} where point is
/// increasing in n with limit start. Throws ToleranceConfigError unless
/// 0 < tol < half the smallest gap among the set points up to n_max (the
/// gap to start included), and DomainError for n_max < 3 or non-finite value.
SetMembership classify_membership(double value, double start,
                                  double (*point)(int), double tol, int n_max);

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr int kDefaultNMax = 100;

}  // namespace heckeindex
