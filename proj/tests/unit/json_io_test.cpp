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

#include "heckeindex/json_io.hpp"

namespace heckeindex {
namespace {

TEST(JsonRound, Rounding) {
  EXPECT_EQ(round_significant(0.1 + 0.2), 0.3);
  EXPECT_EQ(round_significant(2.0), 2.0);
  EXPECT_EQ(round_significant(1.4142135623730951), 1.41421356237);
}

TEST(JsonRoundTrip, LaurentAndAlgebraic) {
  const Seed s = mutate_word(annulus_seed(), {1, 2, 1});
  for (const LaurentPoly& p : s.cluster()) {
    EXPECT_EQ(laurent_from_json(to_json(p)), p);
  }
  const AlgebraicNumber a = parse_algebraic(7, "L^2 - 3/2");
  EXPECT_EQ(algebraic_from_json(to_json(a)), a);
  EXPECT_EQ(to_json(a)["n"], 7);
}

TEST(JsonRoundTrip, SeedAndGraph) {
  const Seed s = mutate(a2_seed(), 2);
  EXPECT_EQ(seed_from_json(to_json(s)), s);
  const Seed f = seed_from_file_json(Json::parse(R"({"B": [[0, 2], [-2, 0]]})"));
  EXPECT_EQ(f, annulus_seed());
  const ExchangeGraph g = exchange_graph(a2_seed(), 5);
  const ExchangeGraph back = exchange_graph_from_json(to_json(g));
  ASSERT_EQ(back.nodes.size(), g.nodes.size());
  EXPECT_EQ(back.edges, g.edges);
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    EXPECT_EQ(back.nodes[i].canonical_seed, g.nodes[i].canonical_seed);
    EXPECT_EQ(back.nodes[i].neighbors, g.nodes[i].neighbors);
    EXPECT_EQ(back.nodes[i].hash, g.nodes[i].hash);
  }
}

TEST(JsonRoundTrip, Reports) {
  const LaurentReport lr = check_laurent_phenomenon(annulus_seed(), 3);
  const LaurentReport lr2 = laurent_report_from_json(to_json(lr));
  EXPECT_EQ(lr2.seeds_visited, lr.seeds_visited);
  EXPECT_EQ(lr2.passed(), lr.passed());

  const auto vars = enumerate_cluster_variables(annulus_seed(), 2);
  const auto vars2 = cluster_variables_from_json(to_json(vars));
  ASSERT_EQ(vars2.size(), vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    EXPECT_EQ(vars2[i].word, vars[i].word);
    EXPECT_EQ(vars2[i].variable, vars[i].variable);
  }

  const SetMembership m = jones_admissible(3.5);
  const Json mj = to_json(m);
  EXPECT_TRUE(mj["branch"].is_null());
  EXPECT_TRUE(mj["n"].is_null());
  EXPECT_EQ(membership_from_json(mj).branch, MembershipBranch::kNone);
  EXPECT_EQ(membership_from_json(to_json(jones_admissible(2.0))).n, 4);

  const Classification c = classify(RationalMat2(2, 0, 0, Rational(1, 2)));
  const Classification c2 = classification_from_json(to_json(c));
  EXPECT_EQ(c2.kind, c.kind);
  EXPECT_EQ(c2.trace_squared, c.trace_squared);

  const EllipticRelationProof p = verify_elliptic_relation(5);
  const EllipticRelationProof p2 = relation_proof_from_json(to_json(p));
  EXPECT_EQ(p2.checked_powers, p.checked_powers);
  EXPECT_TRUE(p2.verified);

  const DiscretenessVerdict v = discreteness_decision(1.5);
  const Json vj = to_json(v);
  EXPECT_EQ(vj["verdict"], "non_discrete");
  const DiscretenessVerdict v2 = verdict_from_json(vj);
  EXPECT_EQ(v2.verdict, v.verdict);
  ASSERT_TRUE(v2.witness.has_value());
  EXPECT_EQ(v2.witness->word, v.witness->word);

  const BridgeReport b = discrete_branch_bridge(5);
  const Json bj = to_json(b);
  EXPECT_EQ(bj["t"], "degenerate");
  const BridgeReport b2 = bridge_report_from_json(bj);
  EXPECT_EQ(b2.trace_squared_exact, "L + 1");
  EXPECT_TRUE(b2.consistent);

  const EquivalenceReport e = sqrt_set_equivalence(10, {5.0});
  const EquivalenceReport e2 = equivalence_report_from_json(to_json(e));
  EXPECT_EQ(e2.items.size(), e.items.size());
  EXPECT_TRUE(e2.all_passed());
}

TEST(JsonErrors, MalformedInputIsParseError) {
  for (const char* text : {R"({"B": [[0, 1]]})", R"({"rank": 2})", R"({"B": "x"})"}) {
    try {
      seed_from_file_json(Json::parse(text));
      ADD_FAILURE() << text;
    } catch (const Error& e) {
      EXPECT_TRUE(e.kind() == ErrorKind::kParse || e.kind() == ErrorKind::kDomain) << text;
    }
  }
  EXPECT_THROW(membership_from_json(Json::parse(R"({"value": 1})")), Error);
}

}  // namespace
}  // namespace heckeindex
