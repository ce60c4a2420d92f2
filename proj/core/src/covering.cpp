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

#include "heckeindex/covering.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "heckeindex/algebraic.hpp"
#include "heckeindex/hecke.hpp"

namespace heckeindex {

BranchedCoverSpec::BranchedCoverSpec(int sheet_count,
                                     std::vector<BranchPoint> branch_points)
    : sheet_count_(sheet_count), branch_points_(std::move(branch_points)) {
  if (sheet_count_ < 1) throw DomainError("sheet count must be positive");
  for (const auto& p : branch_points_) {
    if (p.local_degree < 2 || p.local_degree > sheet_count_) {
      throw DomainError("local degree " + std::to_string(p.local_degree) +
                        " outside [2, " + std::to_string(sheet_count_) + "]");
    }
  }
}

std::vector<int> BranchedCoverSpec::local_degrees() const {
  std::vector<int> out;
  out.reserve(branch_points_.size());
  for (const auto& p : branch_points_) out.push_back(p.local_degree);
  return out;
}

BranchedCoverSpec BranchedCoverSpec::cyclic_power(int e) {
  return BranchedCoverSpec(
      e, {BranchPoint{ExtendedComplex::finite({0.0, 0.0}), e},
          BranchPoint{ExtendedComplex::infinity(), e}});
}

bool riemann_hurwitz_check(int euler_base, int euler_cover, int sheets,
                           const std::vector<int>& branch_degrees) {
  long long rhs = static_cast<long long>(sheets) * euler_base;
  for (int e : branch_degrees) rhs -= e - 1;
  return euler_cover == rhs;
}

bool riemann_hurwitz_check(const BranchedCoverSpec& cover, int euler_base,
                           int euler_cover) {
  return riemann_hurwitz_check(euler_base, euler_cover, cover.sheet_count(),
                               cover.local_degrees());
}

ExtendedComplex double_cover_map(ExtendedComplex z) {
  if (z.infinite) return ExtendedComplex::infinity();
  return ExtendedComplex::finite(z.value * z.value);
}

std::vector<ExtendedComplex> double_cover_preimages(ExtendedComplex w) {
  if (w.infinite) return {ExtendedComplex::infinity()};
  if (w.value == Complex(0.0, 0.0)) return {ExtendedComplex::finite(w.value)};
  const Complex r = std::sqrt(w.value);
  return {ExtendedComplex::finite(r), ExtendedComplex::finite(-r)};
}

BridgeReport annulus_to_orbifold_bridge(double t, double tol, int n_max) {
  if (!(t > 1.0) || !std::isfinite(t)) {
    throw ModuliDomainError("annulus modulus must satisfy t > 1");
  }
  BridgeReport r;
  r.modulus_t = t;
  r.trace_squared = trace_squared_of_modulus(t);
  r.lambda = std::sqrt(r.trace_squared);
  r.jones = jones_admissible(r.trace_squared, tol, n_max);
  r.hecke = hecke_admissible(r.lambda, tol, n_max);
  r.consistent = same_branch(r.jones, r.hecke);
  return r;
}

BridgeReport discrete_branch_bridge(int n, double tol, int n_max) {
  if (n < 3 || n > kExactTableBound) {
    throw DomainError("discrete bridge needs 3 <= n <= " +
                      std::to_string(kExactTableBound));
  }
  const AlgebraicNumber lambda = AlgebraicNumber::generator(n);
  const AlgebraicNumber v = lambda * lambda;
  // 4cos^2(pi/n) = 2 + 2cos(2pi/n); compare the exact square against it.
  const double direct = 2.0 + 2.0 * std::cos(2.0 * std::numbers::pi / n);
  BridgeReport r;
  r.trace_squared = v.to_double();
  r.lambda = lambda.to_double();
  r.trace_squared_exact = v.to_string();
  r.lambda_exact = lambda.to_string();
  r.exact = (v - lambda * lambda).is_zero() && lambda.sign() > 0 &&
            std::abs(r.trace_squared - direct) <= 1e-12;
  r.jones = jones_admissible(r.trace_squared, tol, n_max);
  r.hecke = hecke_admissible(r.lambda, tol, n_max);
  r.consistent = same_branch(r.jones, r.hecke);
  return r;
}

bool EquivalenceReport::all_passed() const {
  return std::all_of(items.begin(), items.end(),
                     [](const EquivalenceItem& i) { return i.passed; });
}

namespace {

std::string number_text(double v) {
  std::ostringstream out;
  out.precision(12);
  out << v;
  return out.str();
}

}  // namespace

EquivalenceReport sqrt_set_equivalence(int n_max,
                                       const std::vector<double>& grid) {
  EquivalenceReport report;
  const int top = std::min(n_max, kExactTableBound);
  for (int n = 3; n <= top; ++n) {
    const AlgebraicNumber lambda = AlgebraicNumber::generator(n);
    const AlgebraicNumber v = lambda * lambda;
    const IndexMembership j = jones_admissible(v.to_double());
    const LambdaMembership h = hecke_admissible(lambda.to_double());
    EquivalenceItem item;
    item.name = "discrete n=" + std::to_string(n);
    item.passed = lambda.sign() > 0 && (v - lambda * lambda).is_zero() &&
                  j.branch == MembershipBranch::kDiscrete && j.n == n &&
                  same_branch(j, h);
    item.detail = "lambda = " + lambda.to_string() + ", v = " + v.to_string();
    report.items.push_back(std::move(item));
  }
  if (n_max > kExactTableBound) {
    report.items.push_back({"discrete cap", true,
                            "exact checks stop at n = " +
                                std::to_string(kExactTableBound)});
  }

  {
    EquivalenceItem item;
    item.name = "endpoint 4 <-> 2";
    const IndexMembership j = jones_admissible(4.0);
    const LambdaMembership h = hecke_admissible(2.0);
    item.passed = std::sqrt(4.0) == 2.0 &&
                  j.branch == MembershipBranch::kContinuous && same_branch(j, h);
    item.detail = "sqrt(4) = 2, both continuous";
    report.items.push_back(std::move(item));
  }

  for (double v : grid) {
    EquivalenceItem item;
    item.name = "grid v=" + number_text(v);
    if (!(v > 0.0) || !std::isfinite(v)) {
      item.passed = false;
      item.detail = "grid values must be positive and finite";
      report.items.push_back(std::move(item));
      continue;
    }
    const double lambda = std::sqrt(v);
    const IndexMembership j = jones_admissible(v);
    const LambdaMembership h = hecke_admissible(lambda);
    bool ok = same_branch(j, h) && j.admissible == h.admissible;
    if (v >= 4.0) ok = ok && lambda >= 2.0 && lambda * lambda >= 4.0;
    item.passed = ok;
    item.detail = "lambda = " + number_text(lambda) + ", jones " +
                  branch_name(j.branch) + ", hecke " + branch_name(h.branch);
    report.items.push_back(std::move(item));
  }
  return report;
}

std::string bridge_reports_csv(const std::vector<std::string>& inputs,
                               const std::vector<BridgeReport>& reports) {
  if (inputs.size() != reports.size()) {
    throw DomainError("inputs and reports differ in length");
  }
  std::ostringstream out;
  out << "kind,input,t,trace_squared,lambda,jones_branch,jones_n,hecke_branch,"
         "hecke_n,consistent\n";
  auto n_text = [](const SetMembership& m) {
    return m.branch == MembershipBranch::kDiscrete ? std::to_string(m.n)
                                                   : std::string();
  };
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const BridgeReport& r = reports[i];
    out << (r.modulus_t ? "t" : "n") << ',' << inputs[i] << ','
        << (r.modulus_t ? number_text(*r.modulus_t) : "degenerate") << ','
        << number_text(r.trace_squared) << ',' << number_text(r.lambda) << ','
        << branch_name(r.jones.branch) << ',' << n_text(r.jones) << ','
        << branch_name(r.hecke.branch) << ',' << n_text(r.hecke) << ','
        << (r.consistent ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace heckeindex
