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

#include <random>

#include "heckeindex/cluster.hpp"
#include "heckeindex/json_io.hpp"
#include "oracles.hpp"

namespace heckeindex {
namespace {

LaurentPoly var(int n, int i) { return LaurentPoly::variable(standard_variables(n), i); }
LaurentPoly one(int n) { return LaurentPoly::constant(standard_variables(n), 1); }

TEST(ExchangeMatrix, RejectsNonSkewSymmetric) {
  EXPECT_THROW(ExchangeMatrix({{0, 1}, {1, 0}}), DomainError);
  EXPECT_THROW(ExchangeMatrix({{1, 0}, {0, 0}}), DomainError);
  EXPECT_THROW(ExchangeMatrix({{0, 1, 0}, {-1, 0}}), DomainError);
}

TEST(Mutation, AnnulusFirstStep) {
  const Seed s = mutate(annulus_seed(), 1);
  EXPECT_EQ(s.cluster()[0], exact_div(one(2) + var(2, 1) * var(2, 1), var(2, 0)));
  EXPECT_EQ(s.cluster()[0].to_string(), "x1^-1*x2^2 + x1^-1");
  EXPECT_EQ(s.cluster()[1], var(2, 1));
  EXPECT_EQ(s.matrix(), ExchangeMatrix({{0, -2}, {2, 0}}));
  EXPECT_TRUE(is_positive(s.cluster()[0]));
  EXPECT_EQ(annulus_seed().rank(), 2);
}

TEST(Mutation, A2FirstStep) {
  const Seed s = mutate(a2_seed(), 1);
  EXPECT_EQ(s.cluster()[0] * var(2, 0), one(2) + var(2, 1));
  EXPECT_EQ(s.matrix(), ExchangeMatrix({{0, -1}, {1, 0}}));
}

TEST(Mutation, DirectionOutOfRange) {
  EXPECT_THROW(mutate(annulus_seed(), 0), DomainError);
  EXPECT_THROW(mutate(annulus_seed(), 3), DomainError);
}

TEST(Mutation, CorruptedSeedRaisesDivisibility) {
  // x1 replaced by x1 + 1: the exchange binomial is not divisible by it.
  const Seed bad({var(2, 0) + one(2), var(2, 1)}, ExchangeMatrix({{0, 2}, {-2, 0}}));
  try {
    (void)mutate(bad, 1);
    FAIL();
  } catch (const MutationDivisibilityError& e) {
    EXPECT_EQ(e.direction(), 1);
  }
}

ExchangeMatrix random_matrix(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> rank_dist(1, 4);
  std::uniform_int_distribution<int> entry(-3, 3);
  const int n = rank_dist(rng);
  std::vector<std::vector<int>> rows(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      rows[i][j] = entry(rng);
      rows[j][i] = -rows[i][j];
    }
  }
  return ExchangeMatrix(rows);
}

TEST(MutationProperty, InvolutionAndSkewSymmetry) {
  std::mt19937_64 rng(300);
  std::uniform_int_distribution<int> pre(0, 2);
  for (int i = 0; i < 300; ++i) {
    Seed s = initial_seed(random_matrix(rng));
    // Start from a mutated seed so clusters are not all monomials.
    std::uniform_int_distribution<int> dir(1, s.rank());
    for (int j = pre(rng); j > 0; --j) s = mutate(s, dir(rng));
    for (int k = 1; k <= s.rank(); ++k) {
      const Seed m = mutate(s, k);
      const auto rows = m.matrix().rows();
      for (int a = 0; a < s.rank(); ++a) {
        for (int b = 0; b < s.rank(); ++b) ASSERT_EQ(rows[a][b], -rows[b][a]);
      }
      ASSERT_EQ(mutate(m, k), s);
    }
  }
}

TEST(Enumerate, ZeroMutationsGivesInitialCluster) {
  const auto vars = enumerate_cluster_variables(annulus_seed(), 0);
  ASSERT_EQ(vars.size(), 2u);
  EXPECT_EQ(vars[0].variable, var(2, 0));
  EXPECT_EQ(vars[1].variable, var(2, 1));
}

TEST(Enumerate, AnnulusCounts) {
  EXPECT_EQ(enumerate_cluster_variables(annulus_seed(), 2).size(), 6u);
  EXPECT_EQ(enumerate_cluster_variables(annulus_seed(), 4).size(), 10u);
}

TEST(Enumerate, DepthCap) {
  EXPECT_THROW(enumerate_cluster_variables(annulus_seed(), 13), ResourceError);
  ExplorationOptions o;
  o.depth_cap = 14;
  EXPECT_EQ(enumerate_cluster_variables(annulus_seed(), 13, o).size(), 28u);
}

TEST(Enumerate, MatchesKroneckerRecurrence) {
  const auto vars = enumerate_cluster_variables(annulus_seed(), 8);
  ASSERT_EQ(vars.size(), 18u);
  const std::vector<std::vector<Rational>> points{
      {Rational(2, 3), Rational(5, 7)}, {Rational(-3), Rational(11, 2)}};
  for (const auto& point : points) {
    const auto seq = oracle::kronecker_sequence(point[0], point[1], 8);
    std::set<Rational> expected;
    for (const auto& [m, v] : seq) expected.insert(v);
    std::set<Rational> got;
    for (const auto& r : vars) got.insert(r.variable.evaluate(point));
    EXPECT_EQ(got, expected);
  }
}

TEST(Enumerate, RecurrenceHoldsExactly) {
  // Alternating words 1,2,1,... give x3, x4, ...; 2,1,2,... give x0, x-1, ...
  std::map<int, LaurentPoly> seq{{1, var(2, 0)}, {2, var(2, 1)}};
  Seed forward = annulus_seed();
  Seed backward = annulus_seed();
  for (int step = 0; step < 8; ++step) {
    const int k = step % 2 + 1;
    forward = mutate(forward, k);
    seq[3 + step] = forward.cluster()[k - 1];
    backward = mutate(backward, 3 - k);
    seq[-step] = backward.cluster()[2 - k];
  }
  for (int m = -6; m <= 9; ++m) {
    EXPECT_EQ(seq.at(m + 1) * seq.at(m - 1), seq.at(m) * seq.at(m) + one(2)) << m;
    EXPECT_TRUE(is_positive(seq.at(m)));
  }
}

TEST(Enumerate, A2Saturates) {
  const std::vector<Rational> point{Rational(3, 5), Rational(-7, 4)};
  const auto orbit = oracle::a2_orbit(point[0], point[1]);
  ASSERT_EQ(orbit.size(), 5u);
  for (int depth : {5, 6, 10}) {
    const auto vars = enumerate_cluster_variables(a2_seed(), depth);
    ASSERT_EQ(vars.size(), 5u);
    std::set<Rational> got;
    for (const auto& r : vars) got.insert(r.variable.evaluate(point));
    EXPECT_EQ(got, orbit);
  }
}

TEST(LaurentCheck, AnnulusDepthEight) {
  const LaurentReport r = check_laurent_phenomenon(annulus_seed(), 8);
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(r.violations.empty());
  EXPECT_EQ(r.variables_checked, 18u);
}

TEST(LaurentCheck, A2AndVacuous) {
  EXPECT_TRUE(check_laurent_phenomenon(a2_seed(), 10).passed());
  const LaurentReport r = check_laurent_phenomenon(annulus_seed(), 0);
  EXPECT_TRUE(r.passed());
}

TEST(LaurentCheck, ReportsCorruptedSeed) {
  const Seed bad({var(2, 0) + one(2), var(2, 1)}, ExchangeMatrix({{0, 2}, {-2, 0}}));
  const LaurentReport r = check_laurent_phenomenon(bad, 2);
  EXPECT_FALSE(r.all_laurent);
  ASSERT_FALSE(r.violations.empty());
  EXPECT_EQ(r.violations.front().kind, "divisibility");
}

TEST(ExchangeGraph, A2Pentagon) {
  const ExchangeGraph g = exchange_graph(a2_seed(), 10);
  ASSERT_EQ(g.nodes.size(), 5u);
  ASSERT_EQ(g.edges.size(), 5u);
  for (const auto& node : g.nodes) EXPECT_EQ(node.neighbors.size(), 2u);
  EXPECT_EQ(exchange_graph(a2_seed(), 5).nodes.size(), 5u);
}

TEST(ExchangeGraph, AnnulusPath) {
  const ExchangeGraph g = exchange_graph(annulus_seed(), 3);
  EXPECT_EQ(g.nodes.size(), 7u);
  EXPECT_EQ(g.edges.size(), 6u);
  int leaves = 0;
  for (const auto& node : g.nodes) leaves += node.neighbors.size() == 1;
  EXPECT_EQ(leaves, 2);
}

TEST(ExchangeGraph, SingleNodeAtDepthZero) {
  const ExchangeGraph g = exchange_graph(annulus_seed(), 0);
  EXPECT_EQ(g.nodes.size(), 1u);
  EXPECT_TRUE(g.edges.empty());
}

TEST(ExchangeGraph, CanonicalSeedsAreIdempotent) {
  const ExchangeGraph g = exchange_graph(initial_seed(ExchangeMatrix({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}})), 6);
  EXPECT_EQ(g.nodes.size(), 14u);  // type A3 associahedron
  for (const auto& node : g.nodes) {
    EXPECT_EQ(canonicalize(node.canonical_seed), node.canonical_seed);
  }
}

TEST(ExchangeGraph, ThreadCountDoesNotChangeResult) {
  ExplorationOptions one_thread;
  ExplorationOptions four;
  four.threads = 4;
  const Seed s = initial_seed(ExchangeMatrix({{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}}));
  EXPECT_EQ(to_json(exchange_graph(s, 4, one_thread)).dump(),
            to_json(exchange_graph(s, 4, four)).dump());
  EXPECT_EQ(to_json(enumerate_cluster_variables(annulus_seed(), 8, one_thread)).dump(),
            to_json(enumerate_cluster_variables(annulus_seed(), 8, four)).dump());
}

TEST(Canonicalize, PermutationInvariant) {
  const Seed s = mutate_word(initial_seed(ExchangeMatrix({{0, 2, -1}, {-2, 0, 1}, {1, -1, 0}})), {1, 3});
  const std::vector<int> perm{2, 0, 1};
  std::vector<LaurentPoly> cluster;
  for (int i : perm) cluster.push_back(s.cluster()[i]);
  const Seed permuted(cluster, permute_matrix(s.matrix(), perm));
  EXPECT_EQ(canonicalize(s), canonicalize(permuted));
  EXPECT_EQ(seed_hash(s), seed_hash(permuted));
  EXPECT_EQ(seed_hash(s).size(), 16u);
}

TEST(Export, DotAndCsv) {
  const ExchangeGraph g = exchange_graph(a2_seed(), 5);
  const std::string dot = to_dot(g);
  EXPECT_EQ(dot.rfind("graph exchange {", 0), 0u);
  EXPECT_NE(dot.find("n0 -- n1 [label=\"1\"]"), std::string::npos);
  const std::string csv = cluster_variables_csv(enumerate_cluster_variables(annulus_seed(), 1));
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "mutation_word,variable_canonical_string,num_terms,all_positive");
  EXPECT_NE(csv.find("1,x1^-1*x2^2 + x1^-1,2,true"), std::string::npos);
}

}  // namespace
}  // namespace heckeindex
