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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "heckeindex/algebraic.hpp"
#include "heckeindex/membership.hpp"
#include "heckeindex/moebius.hpp"

namespace heckeindex {

/// One syllable of a Hecke word: S, or T^exponent with exponent != 0.
struct Syllable {
  bool is_s = false;
  std::int32_t exponent = 1;

  static Syllable s() { return {true, 1}; }
  static Syllable t(std::int32_t m) { return {false, m}; }
  bool operator==(const Syllable&) const = default;
};

/// Reduced word in S and T with a sign: no adjacent T syllables, no T^0,
/// no S S (S^2 = -I is folded into the sign).
class HeckeWord {
 public:
  HeckeWord() = default;

  // Reduces an arbitrary syllable sequence.
  static HeckeWord from_syllables(const std::vector<Syllable>& syllables,
                                  int sign = 1);
  // "S T^2 S T^-1", "-I", "(S T)^5 T"; throws Error(kParse) on bad input.
  static HeckeWord parse(std::string_view text);

  // (S T)^m
  static HeckeWord st_power(std::int64_t m);

  const std::vector<Syllable>& syllables() const { return syllables_; }
  int sign() const { return sign_; }
  bool empty() const { return syllables_.empty(); }
  // Letter length: number of S plus the sum of |T exponents|.
  std::int64_t length() const;

  HeckeWord operator*(const HeckeWord& other) const;
  HeckeWord inverse() const;
  bool operator==(const HeckeWord&) const = default;

  // Repeated two-syllable blocks are run-length encoded as "(S T^a)^m".
  std::string to_string() const;

 private:
  void push(Syllable s);

  std::vector<Syllable> syllables_;
  int sign_ = 1;
};

/// T = [[1, lambda], [0, 1]] and S = [[0, 1], [-1, 0]] in the mode of lambda.
/// Throws DomainError unless lambda > 0.
std::pair<RationalMat2, RationalMat2> hecke_generators(const Rational& lambda);
std::pair<AlgebraicMat2, AlgebraicMat2> hecke_generators(
    const AlgebraicNumber& lambda);
std::pair<ComplexMat2, ComplexMat2> hecke_generators(double lambda);

RationalMat2 evaluate_word(const HeckeWord& word, const Rational& lambda);
AlgebraicMat2 evaluate_word(const HeckeWord& word,
                            const AlgebraicNumber& lambda);
ComplexMat2 evaluate_word(const HeckeWord& word, double lambda);

// 2cos(pi/n)
double hecke_discrete_value(int n);

/// Membership in [2, inf) U {2cos(pi/n) : 3 <= n <= n_max}.
LambdaMembership hecke_admissible(double lambda,
                                  double tol = kDefaultTolerance,
                                  int n_max = kDefaultNMax);

/// Exact certificate that (S T)^n = sign * I with no smaller power equal to
/// +-I, in Q(2cos(pi/n)).
struct EllipticRelationProof {
  int n = 0;
  int order = 0;  // first m with (S T)^m = +-I
  int sign = 1;
  std::string lambda_exact;
  std::vector<std::string> checked_powers;  // "m:not_pm_identity" etc.
  bool verified = false;
};

/// Throws DomainError unless 3 <= n <= kExactTableBound.
EllipticRelationProof verify_elliptic_relation(int n);

struct WitnessOptions {
  double epsilon = 1e-6;
  // Largest power of S T tried on the fast path.
  std::int64_t max_power = 1'000'000;
  // Letter-length bound for the breadth-first fallback.
  int max_bfs_length = 14;
  // Matrices closer than this to +-I count as relations, not witnesses.
  double identity_floor = 1e-12;
  // Commutators of near-identity powers; see nondiscreteness_witness.
  bool use_commutators = true;
  int threads = 1;
};

struct Witness {
  HeckeWord word;
  double distance = 0.0;
  std::string method;  // "power", "commutator" or "bfs"
  std::int64_t power = 0;
};

struct WitnessSearch {
  std::optional<Witness> witness;
  std::size_t powers_tried = 0;
  std::size_t words_explored = 0;
  bool commensurable_rotation = false;
};

// min(||M - I||_F, ||M + I||_F)
double distance_to_pm_identity(const ComplexMat2& m);

/// Searches for a non-identity word within epsilon of +-I (Frobenius).
///
/// Fast path: the rotation angle theta = arccos(-lambda/2) of S T gives
/// candidate powers (S T)^q from the convergents p/q of theta/pi. A power
/// within epsilon is returned directly. Otherwise, for each candidate power
/// P the commutator [P, T P T^-1], whose distance is roughly the square of
/// P's, is tried. When theta/pi is rational the powers only produce
/// relations and the search falls back to breadth-first enumeration of
/// reduced words in length-then-lexicographic order (S < T < T^-1) with
/// matrices deduplicated on a 1e-12 grid modulo sign.
///
/// Throws DomainError unless 0 < lambda < 2 and epsilon > 0.
WitnessSearch nondiscreteness_witness(double lambda,
                                      const WitnessOptions& options = {});

enum class VerdictTag {
  kDiscreteContinuous,
  kDiscreteHecke,
  kNonDiscrete,
  kUnresolved,
};

const char* verdict_tag_name(VerdictTag tag);

struct DiscretenessVerdict {
  VerdictTag verdict = VerdictTag::kUnresolved;
  double lambda = 0.0;
  std::string lambda_exact;  // empty when lambda is floating
  int n = 0;                 // kDiscreteHecke only
  bool snapped = false;      // floating lambda replaced by 2cos(pi/n)
  std::optional<EllipticRelationProof> certificate;
  std::optional<Witness> witness;
  std::size_t words_explored = 0;

  bool exact_certificate() const {
    return certificate.has_value() && certificate->verified;
  }
};

struct DecisionOptions {
  double tol = kDefaultTolerance;
  int n_max = kDefaultNMax;
  WitnessOptions witness;
};

/// Never reports discreteness without either lambda >= 2 or an exact relation
/// certificate; a failed witness search is reported as kUnresolved.
DiscretenessVerdict discreteness_decision(double lambda,
                                          const DecisionOptions& options = {});
DiscretenessVerdict discreteness_decision(const AlgebraicNumber& lambda,
                                          const DecisionOptions& options = {});

}  // namespace heckeindex
