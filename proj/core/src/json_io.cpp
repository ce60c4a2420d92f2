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

#include "heckeindex/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace heckeindex {

double round_significant(double value, int digits) {
  if (!std::isfinite(value) || value == 0.0) return value;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return std::strtod(buf, nullptr);
}

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw Error(ErrorKind::kParse, "malformed JSON: " + what);
}

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    bad(std::string(what) + ": " + e.what());
  }
}

Json real(double v) { return round_significant(v); }

Integer integer_from(const Json& j) {
  auto v = parse_integer(j.get<std::string>());
  if (!v) bad("integer coefficient");
  return *v;
}

Rational rational_from(const Json& j) {
  auto v = parse_rational(j.get<std::string>());
  if (!v) bad("rational coefficient");
  return *v;
}

Json word_json(const std::vector<int>& word) { return Json(word); }

Json optional_int(bool present, int value) {
  return present ? Json(value) : Json(nullptr);
}

}  // namespace

// --- exact algebra -----------------------------------------------------------

Json to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    terms.push_back({{"exp", it->first}, {"coef", to_string(it->second)}});
  }
  return {{"vars", p.variables()}, {"terms", std::move(terms)}};
}

LaurentPoly laurent_from_json(const Json& j) {
  return guarded("LaurentPoly", [&] {
    LaurentPoly p(j.at("vars").get<std::vector<std::string>>());
    for (const auto& term : j.at("terms")) {
      const auto exp = term.at("exp").get<Exponent>();
      if (static_cast<int>(exp.size()) != p.num_variables()) {
        bad("exponent length");
      }
      p.add_term(exp, integer_from(term.at("coef")));
    }
    return p;
  });
}

Json to_json(const AlgebraicNumber& a) {
  Json residue = Json::array();
  for (const auto& c : a.residue().coefficients()) residue.push_back(to_string(c));
  return {{"n", a.n()}, {"residue", std::move(residue)}};
}

AlgebraicNumber algebraic_from_json(const Json& j) {
  return guarded("AlgebraicNumber", [&] {
    const int n = j.at("n").get<int>();
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("residue")) coeffs.push_back(rational_from(c));
    return AlgebraicNumber(AlgebraicField::get(n), QPoly(std::move(coeffs)));
  });
}

// --- cluster -----------------------------------------------------------------

Json to_json(const Seed& seed) {
  Json cluster = Json::array();
  for (const auto& x : seed.cluster()) cluster.push_back(to_json(x));
  return {{"rank", seed.rank()},
          {"B", seed.matrix().rows()},
          {"cluster", std::move(cluster)}};
}

Seed seed_from_json(const Json& j) {
  return guarded("Seed", [&] {
    ExchangeMatrix b(j.at("B").get<std::vector<std::vector<int>>>());
    if (j.at("rank").get<int>() != b.rank()) bad("rank does not match B");
    std::vector<LaurentPoly> cluster;
    for (const auto& x : j.at("cluster")) cluster.push_back(laurent_from_json(x));
    return Seed(std::move(cluster), std::move(b));
  });
}

Seed seed_from_file_json(const Json& j) {
  return guarded("seed file", [&] {
    ExchangeMatrix b(j.at("B").get<std::vector<std::vector<int>>>());
    if (j.contains("rank") && j.at("rank").get<int>() != b.rank()) {
      bad("rank does not match B");
    }
    return initial_seed(b);
  });
}

Json to_json(const ExchangeGraph& graph) {
  Json nodes = Json::array();
  for (const auto& node : graph.nodes) {
    Json neighbors = Json::array();
    for (const auto& [k, id] : node.neighbors) neighbors.push_back({k, id});
    nodes.push_back({{"id", node.id},
                     {"depth", node.depth},
                     {"word", word_json(node.word)},
                     {"hash", node.hash},
                     {"seed", to_json(node.canonical_seed)},
                     {"neighbors", std::move(neighbors)}});
  }
  Json edges = Json::array();
  for (const auto& e : graph.edges) {
    edges.push_back(
        {{"source", e.source}, {"target", e.target}, {"direction", e.direction}});
  }
  return {{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

ExchangeGraph exchange_graph_from_json(const Json& j) {
  return guarded("ExchangeGraph", [&] {
    ExchangeGraph g;
    for (const auto& n : j.at("nodes")) {
      ExchangeGraphNode node{n.at("id").get<int>(),
                             seed_from_json(n.at("seed")),
                             n.at("depth").get<int>(),
                             n.at("word").get<std::vector<int>>(),
                             {},
                             n.at("hash").get<std::string>()};
      for (const auto& nb : n.at("neighbors")) {
        node.neighbors.emplace_back(nb.at(0).get<int>(), nb.at(1).get<int>());
      }
      g.nodes.push_back(std::move(node));
    }
    for (const auto& e : j.at("edges")) {
      g.edges.push_back({e.at("source").get<int>(), e.at("target").get<int>(),
                         e.at("direction").get<int>()});
    }
    return g;
  });
}

Json to_json(const LaurentReport& report) {
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    violations.push_back(
        {{"word", word_json(v.word)}, {"kind", v.kind}, {"detail", v.detail}});
  }
  return {{"max_mutations", report.max_mutations},
          {"seeds_visited", report.seeds_visited},
          {"variables_checked", report.variables_checked},
          {"all_laurent", report.all_laurent},
          {"all_positive", report.all_positive},
          {"passed", report.passed()},
          {"violations", std::move(violations)}};
}

LaurentReport laurent_report_from_json(const Json& j) {
  return guarded("LaurentReport", [&] {
    LaurentReport r;
    r.max_mutations = j.at("max_mutations").get<int>();
    r.seeds_visited = j.at("seeds_visited").get<std::size_t>();
    r.variables_checked = j.at("variables_checked").get<std::size_t>();
    r.all_laurent = j.at("all_laurent").get<bool>();
    r.all_positive = j.at("all_positive").get<bool>();
    for (const auto& v : j.at("violations")) {
      r.violations.push_back({v.at("word").get<std::vector<int>>(),
                              v.at("kind").get<std::string>(),
                              v.at("detail").get<std::string>()});
    }
    if (j.at("passed").get<bool>() != r.passed()) bad("inconsistent passed flag");
    return r;
  });
}

Json to_json(const std::vector<ClusterVariableRecord>& records) {
  Json out = Json::array();
  for (const auto& r : records) {
    out.push_back({{"word", word_json(r.word)},
                   {"variable", to_json(r.variable)},
                   {"canonical", r.variable.to_string()},
                   {"num_terms", r.variable.num_terms()},
                   {"all_positive", is_positive(r.variable)}});
  }
  return {{"count", records.size()}, {"variables", std::move(out)}};
}

std::vector<ClusterVariableRecord> cluster_variables_from_json(const Json& j) {
  return guarded("cluster variables", [&] {
    std::vector<ClusterVariableRecord> out;
    for (const auto& r : j.at("variables")) {
      out.push_back({r.at("word").get<std::vector<int>>(),
                     laurent_from_json(r.at("variable"))});
    }
    if (j.at("count").get<std::size_t>() != out.size()) bad("count mismatch");
    return out;
  });
}

// --- moebius -----------------------------------------------------------------

Json to_json(const SetMembership& m) {
  const bool discrete = m.branch == MembershipBranch::kDiscrete;
  return {{"value", real(m.value)},
          {"admissible", m.admissible},
          {"branch", m.admissible ? Json(branch_name(m.branch)) : Json(nullptr)},
          {"n", optional_int(discrete, m.n)},
          {"residual", real(m.residual)}};
}

SetMembership membership_from_json(const Json& j) {
  return guarded("membership", [&] {
    SetMembership m;
    m.value = j.at("value").get<double>();
    m.admissible = j.at("admissible").get<bool>();
    const Json& branch = j.at("branch");
    if (branch.is_null()) {
      if (m.admissible) bad("admissible without branch");
      m.branch = MembershipBranch::kNone;
    } else {
      const auto name = branch.get<std::string>();
      if (name == "continuous") {
        m.branch = MembershipBranch::kContinuous;
      } else if (name == "discrete") {
        m.branch = MembershipBranch::kDiscrete;
      } else {
        bad("unknown branch '" + name + "'");
      }
      if (!m.admissible) bad("branch without admissibility");
    }
    const Json& n = j.at("n");
    if (m.branch == MembershipBranch::kDiscrete) {
      m.n = n.get<int>();
    } else if (!n.is_null()) {
      bad("n set off the discrete branch");
    }
    m.residual = j.at("residual").get<double>();
    return m;
  });
}

Json to_json(const Classification& c) {
  const bool finite = c.kind.tag == TransformTag::kEllipticFinite;
  return {{"kind", transform_tag_name(c.kind.tag)},
          {"order", optional_int(finite, c.kind.order)},
          {"trace_squared",
           {{"re", real(c.trace_squared.real())},
            {"im", real(c.trace_squared.imag())}}},
          {"exact", c.exact}};
}

Classification classification_from_json(const Json& j) {
  return guarded("classification", [&] {
    Classification c;
    const auto name = j.at("kind").get<std::string>();
    bool found = false;
    for (auto tag : {TransformTag::kLoxodromic, TransformTag::kHyperbolic,
                     TransformTag::kParabolic, TransformTag::kEllipticFinite,
                     TransformTag::kEllipticGeneric}) {
      if (name == transform_tag_name(tag)) {
        c.kind.tag = tag;
        found = true;
      }
    }
    if (!found) bad("unknown transformation kind '" + name + "'");
    if (c.kind.tag == TransformTag::kEllipticFinite) {
      c.kind.order = j.at("order").get<int>();
    } else if (!j.at("order").is_null()) {
      bad("order set for a non-finite kind");
    }
    c.trace_squared = Complex(j.at("trace_squared").at("re").get<double>(),
                              j.at("trace_squared").at("im").get<double>());
    c.exact = j.at("exact").get<bool>();
    return c;
  });
}

// --- hecke -------------------------------------------------------------------

Json to_json(const EllipticRelationProof& proof) {
  return {{"n", proof.n},
          {"order", proof.order},
          {"sign", proof.sign},
          {"lambda_exact", proof.lambda_exact},
          {"checked_powers", proof.checked_powers},
          {"verified", proof.verified}};
}

EllipticRelationProof relation_proof_from_json(const Json& j) {
  return guarded("relation proof", [&] {
    EllipticRelationProof p;
    p.n = j.at("n").get<int>();
    p.order = j.at("order").get<int>();
    p.sign = j.at("sign").get<int>();
    if (p.sign != 1 && p.sign != -1) bad("sign must be +-1");
    p.lambda_exact = j.at("lambda_exact").get<std::string>();
    p.checked_powers = j.at("checked_powers").get<std::vector<std::string>>();
    p.verified = j.at("verified").get<bool>();
    return p;
  });
}

Json to_json(const DiscretenessVerdict& v) {
  Json witness = nullptr;
  if (v.witness) {
    witness = {{"word", v.witness->word.to_string()},
               {"distance", real(v.witness->distance)},
               {"method", v.witness->method},
               {"power", v.witness->power},
               {"length", v.witness->word.length()}};
  }
  return {{"lambda", real(v.lambda)},
          {"lambda_exact",
           v.lambda_exact.empty() ? Json(nullptr) : Json(v.lambda_exact)},
          {"verdict", verdict_tag_name(v.verdict)},
          {"n", optional_int(v.n != 0, v.n)},
          {"snapped", v.snapped},
          {"witness", std::move(witness)},
          {"words_explored", v.words_explored},
          {"certificate",
           v.certificate ? to_json(*v.certificate) : Json(nullptr)},
          {"exact_certificate", v.exact_certificate()}};
}

DiscretenessVerdict verdict_from_json(const Json& j) {
  return guarded("verdict", [&] {
    DiscretenessVerdict v;
    v.lambda = j.at("lambda").get<double>();
    const auto name = j.at("verdict").get<std::string>();
    bool found = false;
    for (auto tag : {VerdictTag::kDiscreteContinuous, VerdictTag::kDiscreteHecke,
                     VerdictTag::kNonDiscrete, VerdictTag::kUnresolved}) {
      if (name == verdict_tag_name(tag)) {
        v.verdict = tag;
        found = true;
      }
    }
    if (!found) bad("unknown verdict '" + name + "'");
    if (!j.at("n").is_null()) v.n = j.at("n").get<int>();
    if (j.contains("lambda_exact") && !j.at("lambda_exact").is_null()) {
      v.lambda_exact = j.at("lambda_exact").get<std::string>();
    }
    if (j.contains("snapped")) v.snapped = j.at("snapped").get<bool>();
    if (j.contains("words_explored")) {
      v.words_explored = j.at("words_explored").get<std::size_t>();
    }
    const Json& w = j.at("witness");
    if (!w.is_null()) {
      Witness wit{HeckeWord::parse(w.at("word").get<std::string>()),
                  w.at("distance").get<double>(), "", 0};
      if (w.contains("method")) wit.method = w.at("method").get<std::string>();
      if (w.contains("power")) wit.power = w.at("power").get<std::int64_t>();
      v.witness = std::move(wit);
    }
    if (j.contains("certificate") && !j.at("certificate").is_null()) {
      v.certificate = relation_proof_from_json(j.at("certificate"));
    }
    if (j.at("exact_certificate").get<bool>() != v.exact_certificate()) {
      bad("exact_certificate flag disagrees with certificate");
    }
    return v;
  });
}

// --- covering ----------------------------------------------------------------

Json to_json(const BridgeReport& r) {
  return {{"t", r.modulus_t ? Json(real(*r.modulus_t)) : Json("degenerate")},
          {"trace_squared", real(r.trace_squared)},
          {"lambda", real(r.lambda)},
          {"trace_squared_exact", r.exact ? Json(r.trace_squared_exact) : Json(nullptr)},
          {"lambda_exact", r.exact ? Json(r.lambda_exact) : Json(nullptr)},
          {"exact", r.exact},
          {"jones", to_json(r.jones)},
          {"hecke", to_json(r.hecke)},
          {"consistent", r.consistent}};
}

BridgeReport bridge_report_from_json(const Json& j) {
  return guarded("bridge report", [&] {
    BridgeReport r;
    const Json& t = j.at("t");
    if (t.is_string()) {
      if (t.get<std::string>() != "degenerate") bad("t must be real or \"degenerate\"");
    } else {
      r.modulus_t = t.get<double>();
    }
    r.trace_squared = j.at("trace_squared").get<double>();
    r.lambda = j.at("lambda").get<double>();
    if (j.contains("exact")) r.exact = j.at("exact").get<bool>();
    if (r.exact) {
      r.trace_squared_exact = j.at("trace_squared_exact").get<std::string>();
      r.lambda_exact = j.at("lambda_exact").get<std::string>();
    }
    r.jones = membership_from_json(j.at("jones"));
    r.hecke = membership_from_json(j.at("hecke"));
    r.consistent = j.at("consistent").get<bool>();
    return r;
  });
}

Json to_json(const EquivalenceReport& report) {
  Json items = Json::array();
  for (const auto& i : report.items) {
    items.push_back({{"name", i.name}, {"passed", i.passed}, {"detail", i.detail}});
  }
  return {{"all_passed", report.all_passed()}, {"items", std::move(items)}};
}

EquivalenceReport equivalence_report_from_json(const Json& j) {
  return guarded("equivalence report", [&] {
    EquivalenceReport r;
    for (const auto& i : j.at("items")) {
      r.items.push_back({i.at("name").get<std::string>(),
                         i.at("passed").get<bool>(),
                         i.at("detail").get<std::string>()});
    }
    if (j.at("all_passed").get<bool>() != r.all_passed()) bad("all_passed mismatch");
    return r;
  });
}

}  // namespace heckeindex
