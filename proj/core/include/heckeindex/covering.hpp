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

#include <optional>
#include <string>
#include <vector>

#include "heckeindex/membership.hpp"
#include "heckeindex/moebius.hpp"

namespace heckeindex {

struct BranchPoint {
  ExtendedComplex point;
  int local_degree = 2;
};

/// A branched cover of the sphere by its sheet count and branch data.
class BranchedCoverSpec {
 public:
  // Throws DomainError unless every 2 <= e_i <= sheet_count.
  BranchedCoverSpec(int sheet_count, std::vector<BranchPoint> branch_points);

  int sheet_count() const { return sheet_count_; }
  const std::vector<BranchPoint>& branch_points() const {
    return branch_points_;
  }
  std::vector<int> local_degrees() const;

  // z -> z^e branched over 0 and infinity.
  static BranchedCoverSpec cyclic_power(int e);

 private:
  int sheet_count_;
  std::vector<BranchPoint> branch_points_;
};

// euler_cover == sheets * euler_base - sum(e_i - 1)
bool riemann_hurwitz_check(int euler_base, int euler_cover, int sheets,
                           const std::vector<int>& branch_degrees);
bool riemann_hurwitz_check(const BranchedCoverSpec& cover, int euler_base,
                           int euler_cover);

// z -> z^2 on the sphere; 0 and infinity are fixed.
ExtendedComplex double_cover_map(ExtendedComplex z);
// Both square roots of w, or the single branch point for w in {0, inf}.
std::vector<ExtendedComplex> double_cover_preimages(ExtendedComplex w);

struct BridgeReport {
  std::optional<double> modulus_t;  // empty: no real annulus modulus
  double trace_squared = 0.0;
  double lambda = 0.0;
  // Exact symbolic forms on the discrete branch, e.g. "L + 1" in Q(2cos(pi/5)).
  std::string trace_squared_exact;
  std::string lambda_exact;
  bool exact = false;
  IndexMembership jones;
  LambdaMembership hecke;
  bool consistent = false;
};

/// v = (t+1)^2/t, lambda = +sqrt(v), and both memberships.
/// Throws ModuliDomainError for t <= 1.
BridgeReport annulus_to_orbifold_bridge(double t,
                                        double tol = kDefaultTolerance,
                                        int n_max = kDefaultNMax);

/// lambda = 2cos(pi/n) and v = 4cos^2(pi/n) in exact arithmetic with
/// lambda^2 == v checked exactly. Throws DomainError unless
/// 3 <= n <= kExactTableBound.
BridgeReport discrete_branch_bridge(int n, double tol = kDefaultTolerance,
                                    int n_max = kDefaultNMax);

struct EquivalenceItem {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct EquivalenceReport {
  std::vector<EquivalenceItem> items;
  bool all_passed() const;
};

/// Pointwise check that the positive square root carries the index set onto
/// the lambda set: exactly on the discrete part up to n_max (capped at the
/// exact table bound), and on the sample grid plus the endpoint 4 <-> 2 for
/// the continuous part.
EquivalenceReport sqrt_set_equivalence(int n_max,
                                       const std::vector<double>& grid);

// Header: kind,input,t,trace_squared,lambda,jones_branch,jones_n,
// hecke_branch,hecke_n,consistent
std::string bridge_reports_csv(const std::vector<std::string>& inputs,
                               const std::vector<BridgeReport>& reports);

}  // namespace heckeindex
