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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "heckeindex/cluster.hpp"
#include "heckeindex/covering.hpp"
#include "heckeindex/hecke.hpp"
#include "heckeindex/moebius.hpp"
#include "oracles.hpp"
#include "schema_check.hpp"

#ifndef HECKEINDEX_CLI_PATH
#error "HECKEINDEX_CLI_PATH must name the command-line binary"
#endif

namespace {

using namespace heckeindex;
using Clock = std::chrono::steady_clock;

// Collects the first failure message of a criterion.
struct Check {
  std::string failure;
  void require(bool ok, const std::string& what) {
    if (!ok && failure.empty()) failure = what;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void mutation_involution(Check& c) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> rank_dist(1, 4);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int i = 0; i < 300; ++i) {
    const int n = rank_dist(rng);
    std::vector<std::vector<int>> rows(n, std::vector<int>(n, 0));
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        rows[a][b] = entry(rng);
        rows[b][a] = -rows[a][b];
      }
    }
    const Seed s = initial_seed(ExchangeMatrix(rows));
    for (int k = 1; k <= n; ++k) {
      c.require(mutate(mutate(s, k), k) == s,
                "seed " + std::to_string(i) + " direction " + std::to_string(k));
    }
  }
}

void laurent_phenomenon(Check& c) {
  const LaurentReport r = check_laurent_phenomenon(annulus_seed(), 8);
  c.require(r.all_laurent, "a mutation left the Laurent ring");
  c.require(r.all_positive, "negative coefficient");
  c.require(r.violations.empty(), "violations reported");
  c.require(r.variables_checked == 18, "expected 18 variables, got " +
                                           std::to_string(r.variables_checked));
  for (const auto& rec : enumerate_cluster_variables(annulus_seed(), 8)) {
    for (const auto& [e, coef] : rec.variable.terms()) {
      c.require(coef > 0, "coefficient of " + rec.variable.to_string());
    }
  }
}

void rank_two_oracle(Check& c) {
  // Alternating mutation words walk the sequence in both directions.
  std::map<int, LaurentPoly> seq{{1, annulus_seed().cluster()[0]},
                                 {2, annulus_seed().cluster()[1]}};
  Seed forward = annulus_seed();
  Seed backward = annulus_seed();
  for (int step = 0; step < 8; ++step) {
    const int k = step % 2 + 1;
    forward = mutate(forward, k);
    seq[3 + step] = forward.cluster()[k - 1];
    backward = mutate(backward, 3 - k);
    seq[-step] = backward.cluster()[2 - k];
  }
  const LaurentPoly one = LaurentPoly::constant(standard_variables(2), Integer(1));
  for (int m = -6; m <= 9; ++m) {
    c.require(seq.at(m + 1) * seq.at(m - 1) == seq.at(m) * seq.at(m) + one,
              "recurrence fails at m=" + std::to_string(m));
  }
  const auto vars = enumerate_cluster_variables(annulus_seed(), 8);
  c.require(vars.size() == seq.size(), "enumeration size differs from 18");
  const std::vector<std::array<mpq_class, 2>> points{
      {mpq_class(2, 3), mpq_class(5, 7)}, {mpq_class(-3), mpq_class(11, 2)},
      {mpq_class(13, 17), mpq_class(-19, 23)}};
  for (const auto& p : points) {
    const auto expected = oracle::kronecker_sequence(p[0], p[1], 8);
    const std::vector<Rational> point{p[0], p[1]};
    for (const auto& [m, poly] : seq) {
      c.require(poly.evaluate(point) == expected.at(m),
                "value mismatch at m=" + std::to_string(m));
    }
    std::set<mpq_class> want;
    for (const auto& [m, v] : expected) want.insert(v);
    std::set<mpq_class> got;
    for (const auto& r : vars) got.insert(r.variable.evaluate(point));
    c.require(got == want, "enumerated set differs from the recurrence");
  }
}

void finite_type(Check& c) {
  for (int depth : {5, 6, 8}) {
    const auto vars = enumerate_cluster_variables(a2_seed(), depth);
    c.require(vars.size() == 5, "depth " + std::to_string(depth) + " gives " +
                                    std::to_string(vars.size()) + " variables");
  }
  const std::vector<Rational> point{Rational(3, 5), Rational(-7, 4)};
  const auto orbit = oracle::a2_orbit(point[0], point[1]);
  std::set<mpq_class> got;
  for (const auto& r : enumerate_cluster_variables(a2_seed(), 5)) {
    got.insert(r.variable.evaluate(point));
  }
  c.require(got == orbit, "A2 values differ from the five-periodic recurrence");
  const ExchangeGraph g = exchange_graph(a2_seed(), 5);
  c.require(g.nodes.size() == 5, "graph has " + std::to_string(g.nodes.size()) + " nodes");
  c.require(g.edges.size() == 5, "graph has " + std::to_string(g.edges.size()) + " edges");
  std::map<int, int> degree;
  for (const auto& e : g.edges) {
    c.require(e.source != e.target, "loop edge");
    ++degree[e.source];
    ++degree[e.target];
  }
  for (const auto& [id, d] : degree) c.require(d == 2, "node degree is not 2");
}

void relation_certificates(Check& c) {
  for (int n = 3; n <= 12; ++n) {
    const EllipticRelationProof p = verify_elliptic_relation(n);
    c.require(p.verified && p.order == n, "n=" + std::to_string(n) + " not certified");
    c.require(p.sign == (n % 2 == 1 ? 1 : -1), "n=" + std::to_string(n) + " sign");
    // Independent exact recomputation of every power.
    const AlgebraicNumber lambda = AlgebraicNumber::generator(n);
    const AlgebraicNumber zero = AlgebraicNumber::from_rational(n, 0);
    const AlgebraicNumber one = AlgebraicNumber::from_rational(n, 1);
    const AlgebraicMat2 st(zero, one, -one, -lambda);
    AlgebraicMat2 power = st;
    for (int m = 1; m <= n; ++m) {
      const bool pm = power.is_identity() || power.is_minus_identity();
      c.require(pm == (m == n), "n=" + std::to_string(n) + " power " + std::to_string(m));
      power = power * st;
    }
  }
}

// Letter-by-letter product in long double, independent of evaluate_word.
double recheck_distance(const HeckeWord& w, double lambda) {
  long double m[4] = {1, 0, 0, 1};
  auto right = [&](long double a, long double b, long double cc, long double d) {
    const long double r[4] = {m[0] * a + m[1] * cc, m[0] * b + m[1] * d,
                              m[2] * a + m[3] * cc, m[2] * b + m[3] * d};
    for (int i = 0; i < 4; ++i) m[i] = r[i];
  };
  for (const Syllable& y : w.syllables()) {
    if (y.is_s) {
      right(0, 1, -1, 0);
    } else {
      right(1, static_cast<long double>(lambda) * y.exponent, 0, 1);
    }
  }
  const long double s = w.sign();
  long double best = 1e300L;
  for (long double e : {1.0L, -1.0L}) {
    const long double d0 = s * m[0] - e, d3 = s * m[3] - e;
    best = std::min(best, std::sqrt(d0 * d0 + m[1] * m[1] + m[2] * m[2] + d3 * d3));
  }
  return static_cast<double>(best);
}

void witnesses(Check& c) {
  for (double lambda : {1.2, 1.5, 1.7, 1.9}) {
    const auto start = Clock::now();
    const WitnessSearch s = nondiscreteness_witness(lambda);
    const double elapsed = seconds_since(start);
    std::ostringstream tag;
    tag << "lambda=" << lambda;
    c.require(elapsed < 10.0, tag.str() + " took too long");
    c.require(s.witness.has_value(), tag.str() + " no witness");
    if (!s.witness) continue;
    const Witness& w = *s.witness;
    c.require(w.method == "power" || w.method == "commutator",
              tag.str() + " not from the power fast path");
    c.require(w.power >= 1 && w.power <= 1'000'000, tag.str() + " power out of range");
    c.require(!w.word.empty(), tag.str() + " empty word");
    const double d = recheck_distance(w.word, lambda);
    c.require(d < 1e-6 && d > 0.0, tag.str() + " recheck distance " + std::to_string(d));
    std::cout << "  " << tag.str() << ": " << w.method << " q=" << w.power
              << " distance=" << d << " letters=" << w.word.length() << "\n";
  }
}

void index_bridge(Check& c) {
  for (int n = 3; n <= 12; ++n) {
    const BridgeReport r = discrete_branch_bridge(n);
    c.require(r.exact, "n=" + std::to_string(n) + " not exact");
    const AlgebraicNumber l = parse_algebraic(n, r.lambda_exact);
    const AlgebraicNumber v = parse_algebraic(n, r.trace_squared_exact);
    c.require(l == AlgebraicNumber::generator(n), "n=" + std::to_string(n) + " lambda");
    c.require(l * l == v, "n=" + std::to_string(n) + " lambda^2 != index value");
    const double cn = std::cos(std::numbers::pi / n);
    c.require(std::abs(v.to_double() - 4.0 * cn * cn) < 1e-14,
              "n=" + std::to_string(n) + " index value is not 4cos^2(pi/n)");
    c.require(r.jones.n == n && r.hecke.n == n, "n=" + std::to_string(n) + " membership");
  }
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 5.0);
  for (int i = 0; i < 1000; ++i) {
    double lambda = u(rng);
    if (lambda == 0.0) lambda = 5.0;
    const IndexMembership j = jones_admissible(lambda * lambda, 1e-9);
    const LambdaMembership h = hecke_admissible(lambda, 1e-9);
    c.require(j.admissible == h.admissible && same_branch(j, h),
              "disagreement at lambda=" + std::to_string(lambda));
  }
  for (int n = 3; n <= 100; ++n) {
    const double lambda = hecke_discrete_value(n);
    c.require(same_branch(jones_admissible(lambda * lambda), hecke_admissible(lambda)),
              "discrete point n=" + std::to_string(n));
  }
}

void schottky_bridge(Check& c) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> logv(std::log(4.0 + 1e-6), std::log(1e6));
  for (int i = 0; i < 1000; ++i) {
    const double v = std::exp(logv(rng));
    const double back = trace_squared_of_modulus(modulus_from_trace_squared(v));
    c.require(std::abs(back - v) <= 1e-10 * v, "round trip at v=" + std::to_string(v));
  }
  for (double v : {4.0 + 1e-6, 1e6}) {
    const double back = trace_squared_of_modulus(modulus_from_trace_squared(v));
    c.require(std::abs(back - v) <= 1e-10 * v, "endpoint " + std::to_string(v));
  }
  std::uniform_real_distribution<double> logt(std::log(1.0 + 1e-6), std::log(1e6));
  for (int i = 0; i < 100; ++i) {
    const double t = std::exp(logt(rng));
    c.require(classify(schottky_matrix(Complex(t, 0.0))).kind.tag == TransformTag::kHyperbolic,
              "t=" + std::to_string(t) + " not hyperbolic");
  }
  const AnyMat2 k4 = schottky_matrix(Rational(4));
  c.require(std::holds_alternative<RationalMat2>(k4), "k=4 not exact");
  if (std::holds_alternative<RationalMat2>(k4)) {
    c.require(std::get<RationalMat2>(k4).trace_squared() == Rational(25, 4), "tr^2 != 25/4");
  }
}

void riemann_hurwitz(Check& c) {
  c.require(riemann_hurwitz_check(2, 2, 2, {2, 2}), "(2,2,2,[2,2])");
  for (int e = 2; e <= 10; ++e) {
    c.require(riemann_hurwitz_check(BranchedCoverSpec::cyclic_power(e), 2, 2),
              "z^" + std::to_string(e));
  }
  for (double r : {0.5, 1.0, 2.0, hecke_discrete_value(7) / 2.0}) {
    for (int k = 0; k < 64; ++k) {
      const double phi = 2.0 * std::numbers::pi * k / 64.0;
      const Complex z = std::polar(r, phi);
      const ExtendedComplex w = double_cover_map(ExtendedComplex::finite(z));
      c.require(!w.infinite && std::abs(std::abs(w.value) - r * r) <= 1e-12,
                "circle radius " + std::to_string(r));
      const double arg_err = std::abs(std::remainder(std::arg(w.value) - 2.0 * phi,
                                                     2.0 * std::numbers::pi));
      c.require(arg_err <= 1e-12, "argument doubling at radius " + std::to_string(r));
    }
  }
}

void classification_table(Check& c) {
  c.require(classify_trace_squared(Complex(4.0, 0.0), 1e-9).tag == TransformTag::kParabolic,
            "tau=4");
  c.require(classify(RationalMat2(1, 1, 0, 1)).kind.tag == TransformTag::kParabolic,
            "exact parabolic");
  for (int n = 3; n <= 50; ++n) {
    const double cn = std::cos(std::numbers::pi / n);
    const TransformKind k = classify_trace_squared(Complex(4.0 * cn * cn, 0.0), 1e-9);
    c.require(k.tag == TransformTag::kEllipticFinite && k.order == n,
              "tau=4cos^2(pi/" + std::to_string(n) + ")");
  }
  c.require(classify_trace_squared(Complex(6.25, 0.0), 1e-9).tag == TransformTag::kHyperbolic,
            "tau=6.25");
  c.require(classify(RationalMat2(2, 0, 0, Rational(1, 2))).kind.tag ==
                TransformTag::kHyperbolic,
            "exact 6.25");
}

struct Captured {
  int status = -1;
  std::string out;
};

Captured capture(const std::string& args) {
  Captured r;
  const std::string cmd = std::string("\"") + HECKEINDEX_CLI_PATH + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

void cli_determinism(Check& c) {
  using schema::json;
  const std::vector<std::pair<std::string, std::function<std::string(const json&)>>> cases{
      {"mutate --seed annulus --word 1,2,1,2", schema::mutate},
      {"cluster enumerate --seed annulus --depth 8", schema::enumerate},
      {"cluster graph --seed a2 --depth 5", schema::graph},
      {"cluster laurent-check --seed annulus --depth 8", schema::laurent_report},
      {"moebius classify --matrix 2,0,0,1/2",
       [](const json& j) { return schema::classification(j, "classify", true); }},
      {"moebius bridge --t 4", schema::moebius_bridge},
      {"moebius index --v 3.5", [](const json& j) { return schema::membership(j); }},
      {"moebius table --format json", schema::table},
      {"hecke discrete --lambda 1.7", schema::verdict},
      {"hecke discrete --lambda 2cos:9", schema::verdict},
      {"hecke relation --n 12", [](const json& j) { return schema::relation(j); }},
      {"bridge --t 6.8541019662", [](const json& j) { return schema::bridge(j); }},
      {"bridge --n 5", [](const json& j) { return schema::bridge(j); }},
      {"bridge equivalence", schema::equivalence},
  };
  for (const auto& [args, check] : cases) {
    const Captured a = capture(args);
    const Captured b = capture(args);
    c.require(a.status == 0, "'" + args + "' exited " + std::to_string(a.status));
    c.require(a.out == b.out && a.status == b.status, "'" + args + "' not byte-identical");
    json j;
    try {
      j = json::parse(a.out);
    } catch (const std::exception& e) {
      c.require(false, "'" + args + "' is not JSON");
      continue;
    }
    const std::string error = check(j);
    c.require(error.empty(), "'" + args + "': " + error);
  }
  const Captured t1 = capture("cluster graph --seed annulus --depth 6 --threads 1");
  const Captured t4 = capture("cluster graph --seed annulus --depth 6 --threads 4");
  c.require(t1.out == t4.out, "thread count changes the graph payload");
}

struct Criterion {
  const char* name;
  void (*run)(Check&);
  double time_limit;  // seconds; 0 means none
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"mutation involution on 300 random seeds", mutation_involution, 5.0},
      {"Laurent phenomenon, annulus depth 8", laurent_phenomenon, 10.0},
      {"rank-2 recurrence oracle", rank_two_oracle, 0.0},
      {"A2 closure and pentagon", finite_type, 0.0},
      {"exact (S T)^n certificates, n = 3..12", relation_certificates, 5.0},
      {"non-discreteness witnesses", witnesses, 0.0},
      {"index and lambda set bridge", index_bridge, 0.0},
      {"Schottky modulus bridge", schottky_bridge, 0.0},
      {"Riemann-Hurwitz and double cover", riemann_hurwitz, 0.0},
      {"classification table", classification_table, 0.0},
      {"CLI determinism and schemas", cli_determinism, 0.0},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    const auto start = Clock::now();
    try {
      criteria[i].run(check);
    } catch (const std::exception& e) {
      check.require(false, std::string("exception: ") + e.what());
    }
    const double elapsed = seconds_since(start);
    if (criteria[i].time_limit > 0.0 && elapsed >= criteria[i].time_limit) {
      check.require(false, "runtime " + std::to_string(elapsed) + " s exceeds limit");
    }
    const bool ok = check.failure.empty();
    failed += ok ? 0 : 1;
    std::printf("%s %2zu %s (%.3f s)%s%s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].name,
                elapsed, ok ? "" : ": ", check.failure.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
