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

#include "heckeindex/hecke.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>

#include "heckeindex/continued_fraction.hpp"

namespace heckeindex {

// --- words ------------------------------------------------------------------

void HeckeWord::push(Syllable s) {
  if (!s.is_s && s.exponent == 0) return;
  if (!syllables_.empty()) {
    Syllable& top = syllables_.back();
    if (s.is_s && top.is_s) {
      syllables_.pop_back();
      sign_ = -sign_;
      return;
    }
    if (!s.is_s && !top.is_s) {
      const std::int64_t sum =
          static_cast<std::int64_t>(top.exponent) + s.exponent;
      if (sum > std::numeric_limits<std::int32_t>::max() ||
          sum < std::numeric_limits<std::int32_t>::min()) {
        throw DomainError("T exponent overflow");
      }
      top.exponent = static_cast<std::int32_t>(sum);
      if (top.exponent == 0) syllables_.pop_back();
      return;
    }
  }
  syllables_.push_back(s);
}

HeckeWord HeckeWord::from_syllables(const std::vector<Syllable>& syllables,
                                    int sign) {
  HeckeWord w;
  w.sign_ = sign < 0 ? -1 : 1;
  for (const auto& s : syllables) w.push(s.is_s ? Syllable::s() : s);
  return w;
}

HeckeWord HeckeWord::st_power(std::int64_t m) {
  if (m < 0) return st_power(-m).inverse();
  HeckeWord w;
  w.syllables_.reserve(static_cast<std::size_t>(2 * m));
  for (std::int64_t i = 0; i < m; ++i) {
    w.syllables_.push_back(Syllable::s());
    w.syllables_.push_back(Syllable::t(1));
  }
  return w;
}

std::int64_t HeckeWord::length() const {
  std::int64_t len = 0;
  for (const auto& s : syllables_) len += s.is_s ? 1 : std::abs(static_cast<std::int64_t>(s.exponent));
  return len;
}

HeckeWord HeckeWord::operator*(const HeckeWord& other) const {
  HeckeWord w = *this;
  w.sign_ *= other.sign_;
  w.syllables_.reserve(syllables_.size() + other.syllables_.size());
  for (const auto& s : other.syllables_) w.push(s);
  return w;
}

HeckeWord HeckeWord::inverse() const {
  // S^-1 = -S.
  HeckeWord w;
  w.sign_ = sign_;
  w.syllables_.reserve(syllables_.size());
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) {
    if (it->is_s) {
      w.sign_ = -w.sign_;
      w.push(Syllable::s());
    } else {
      w.push(Syllable::t(-it->exponent));
    }
  }
  return w;
}

namespace {

std::string syllable_text(const Syllable& s) {
  if (s.is_s) return "S";
  if (s.exponent == 1) return "T";
  return "T^" + std::to_string(s.exponent);
}

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  HeckeWord parse() {
    skip_space();
    int sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    }
    HeckeWord w = items();
    skip_space();
    if (pos_ != text_.size()) fail();
    return HeckeWord::from_syllables({}, sign) * w;
  }

 private:
  // One or more factors; an empty word is written "I".
  HeckeWord items() {
    HeckeWord w;
    for (int count = 0;; ++count) {
      skip_space();
      const char c = peek();
      if (c == 'S') {
        ++pos_;
        w = w * HeckeWord::from_syllables({Syllable::s()});
      } else if (c == 'T') {
        ++pos_;
        long long e = 1;
        if (peek() == '^') {
          ++pos_;
          e = integer();
        }
        if (e > std::numeric_limits<std::int32_t>::max() ||
            e < std::numeric_limits<std::int32_t>::min()) {
          fail();
        }
        w = w * HeckeWord::from_syllables({Syllable::t(static_cast<std::int32_t>(e))});
      } else if (c == 'I') {
        ++pos_;
      } else if (c == '(') {
        ++pos_;
        HeckeWord inner = items();
        skip_space();
        if (peek() != ')') fail();
        ++pos_;
        if (peek() != '^') fail();
        ++pos_;
        const long long m = integer();
        if (std::llabs(m) > 10'000'000) fail();
        const HeckeWord base = m < 0 ? inner.inverse() : inner;
        HeckeWord group;
        for (long long i = 0; i < std::llabs(m); ++i) group = group * base;
        w = w * group;
      } else {
        if (count == 0) fail();
        return w;
      }
    }
  }

  long long integer() {
    const std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    auto v = parse_integer(text_.substr(start, pos_ - start));
    if (!v || !v->fits_slong_p()) fail();
    return v->get_si();
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail() const {
    throw Error(ErrorKind::kParse, "cannot parse Hecke word '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

HeckeWord HeckeWord::parse(std::string_view text) {
  return WordParser(text).parse();
}

std::string HeckeWord::to_string() const {
  std::string out = sign_ < 0 ? "-" : "";
  if (syllables_.empty()) return out + "I";
  const std::size_t n = syllables_.size();
  bool first = true;
  for (std::size_t i = 0; i < n;) {
    std::size_t reps = 1;
    if (i + 3 < n) {
      while (i + 2 * reps + 1 < n && syllables_[i + 2 * reps] == syllables_[i] &&
             syllables_[i + 2 * reps + 1] == syllables_[i + 1]) {
        ++reps;
      }
    }
    if (!first) out += ' ';
    first = false;
    if (reps >= 2) {
      out += "(" + syllable_text(syllables_[i]) + " " +
             syllable_text(syllables_[i + 1]) + ")^" + std::to_string(reps);
      i += 2 * reps;
    } else {
      out += syllable_text(syllables_[i]);
      i += 1;
    }
  }
  return out;
}

// --- generators and evaluation --------------------------------------------

namespace {

Rational scaled(const Rational& v, std::int64_t m) { return v * Rational(m); }
AlgebraicNumber scaled(const AlgebraicNumber& v, std::int64_t m) {
  return AlgebraicNumber(v.field_ptr(), v.residue() * Rational(m));
}
Complex scaled(const Complex& v, std::int64_t m) {
  return v * static_cast<double>(m);
}

template <class T>
Mat2<T> s_matrix(const T& sample) {
  using Tr = ScalarTraits<T>;
  return Mat2<T>(Tr::zero_like(sample), Tr::one_like(sample),
                 -Tr::one_like(sample), Tr::zero_like(sample));
}

template <class T>
Mat2<T> t_matrix(const T& lambda, std::int64_t m) {
  using Tr = ScalarTraits<T>;
  return Mat2<T>(Tr::one_like(lambda), scaled(lambda, m), Tr::zero_like(lambda),
                 Tr::one_like(lambda));
}

template <class T>
Mat2<T> evaluate_generic(const HeckeWord& word, const T& lambda) {
  Mat2<T> m = Mat2<T>::identity_like(lambda);
  if (word.sign() < 0) m = -m;
  const Mat2<T> s = s_matrix(lambda);
  for (const auto& syl : word.syllables()) {
    m = m * (syl.is_s ? s : t_matrix(lambda, syl.exponent));
  }
  return m;
}

}  // namespace

std::pair<RationalMat2, RationalMat2> hecke_generators(const Rational& lambda) {
  if (lambda <= 0) throw DomainError("Hecke parameter must be positive");
  return {t_matrix(lambda, 1), s_matrix(lambda)};
}

std::pair<AlgebraicMat2, AlgebraicMat2> hecke_generators(
    const AlgebraicNumber& lambda) {
  if (lambda.sign() <= 0) throw DomainError("Hecke parameter must be positive");
  return {t_matrix(lambda, 1), s_matrix(lambda)};
}

std::pair<ComplexMat2, ComplexMat2> hecke_generators(double lambda) {
  if (!(lambda > 0) || !std::isfinite(lambda)) {
    throw DomainError("Hecke parameter must be positive");
  }
  const Complex l(lambda, 0.0);
  return {t_matrix(l, 1), s_matrix(l)};
}

RationalMat2 evaluate_word(const HeckeWord& word, const Rational& lambda) {
  return evaluate_generic(word, lambda);
}

AlgebraicMat2 evaluate_word(const HeckeWord& word,
                            const AlgebraicNumber& lambda) {
  return evaluate_generic(word, lambda);
}

ComplexMat2 evaluate_word(const HeckeWord& word, double lambda) {
  return evaluate_generic(word, Complex(lambda, 0.0));
}

double hecke_discrete_value(int n) {
  return 2.0 * std::cos(std::numbers::pi / static_cast<double>(n));
}

LambdaMembership hecke_admissible(double lambda, double tol, int n_max) {
  if (!(lambda > 0)) throw DomainError("Hecke parameter must be positive");
  return classify_membership(lambda, 2.0, &hecke_discrete_value, tol, n_max);
}

// --- exact relation ------------------------------------------------------------

namespace {

std::string matrix_text(const AlgebraicMat2& m) {
  return "[[" + m.a().to_string() + ", " + m.b().to_string() + "], [" +
         m.c().to_string() + ", " + m.d().to_string() + "]]";
}

}  // namespace

EllipticRelationProof verify_elliptic_relation(int n) {
  if (n < 3 || n > kExactTableBound) {
    throw DomainError("elliptic relation certificates need 3 <= n <= " +
                      std::to_string(kExactTableBound) + ", got " +
                      std::to_string(n));
  }
  const AlgebraicNumber lambda = AlgebraicNumber::generator(n);
  const auto [t, s] = hecke_generators(lambda);
  const AlgebraicMat2 st = s * t;

  EllipticRelationProof proof;
  proof.n = n;
  proof.lambda_exact = "2cos(pi/" + std::to_string(n) + ")";
  AlgebraicMat2 power = st;
  for (int m = 1; m <= n; ++m) {
    const bool plus = power.is_identity();
    const bool minus = power.is_minus_identity();
    std::string line = "(S T)^" + std::to_string(m) + " = " + matrix_text(power);
    if (plus || minus) {
      proof.order = m;
      proof.sign = plus ? 1 : -1;
      line += plus ? " = +I" : " = -I";
      proof.checked_powers.push_back(std::move(line));
      break;
    }
    line += " != +-I";
    proof.checked_powers.push_back(std::move(line));
    power = power * st;
  }
  proof.verified = proof.order == n;
  return proof;
}

// --- witness search ----------------------------------------------------------

namespace {

struct RealMat {
  long double a, b, c, d;

  RealMat operator*(const RealMat& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c,
            c * o.b + d * o.d};
  }
  RealMat inverse() const { return {d, -b, -c, a}; }
  static RealMat identity() { return {1, 0, 0, 1}; }
};

RealMat power(RealMat base, std::int64_t e) {
  RealMat r = RealMat::identity();
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

long double distance_pm_identity(const RealMat& m) {
  const long double plus = std::sqrt((m.a - 1) * (m.a - 1) + m.b * m.b +
                                     m.c * m.c + (m.d - 1) * (m.d - 1));
  const long double minus = std::sqrt((m.a + 1) * (m.a + 1) + m.b * m.b +
                                      m.c * m.c + (m.d + 1) * (m.d + 1));
  return std::min(plus, minus);
}

using MatKey = std::array<std::int64_t, 4>;

// Entries rounded to a 1e-12 grid, sign chosen so the first entry that is
// not ~0 is positive.
MatKey matrix_key(const RealMat& m) {
  std::array<long double, 4> e{m.a, m.b, m.c, m.d};
  for (long double v : e) {
    if (std::abs(v) > 1e-9L) {
      if (v < 0) {
        for (auto& x : e) x = -x;
      }
      break;
    }
  }
  MatKey key;
  for (std::size_t i = 0; i < 4; ++i) {
    key[i] = static_cast<std::int64_t>(std::llround(e[i] * 1e12L));
  }
  return key;
}

struct BfsEntry {
  HeckeWord word;
  RealMat matrix;
  int last;  // letter index appended last: 0 = S, 1 = T, 2 = T^-1, -1 none
};

}  // namespace

double distance_to_pm_identity(const ComplexMat2& m) {
  const Complex one(1.0, 0.0);
  auto sq = [](Complex z) { return std::norm(z); };
  const double plus = std::sqrt(sq(m.a() - one) + sq(m.b()) + sq(m.c()) +
                                sq(m.d() - one));
  const double minus = std::sqrt(sq(m.a() + one) + sq(m.b()) + sq(m.c()) +
                                 sq(m.d() + one));
  return std::min(plus, minus);
}

WitnessSearch nondiscreteness_witness(double lambda,
                                      const WitnessOptions& options) {
  if (!(lambda > 0.0) || !(lambda < 2.0)) {
    throw DomainError("witness search needs 0 < lambda < 2");
  }
  if (!(options.epsilon > 0.0)) throw DomainError("epsilon must be positive");
  if (options.max_power < 1 || options.max_bfs_length < 0) {
    throw DomainError("search bounds must be positive");
  }

  WitnessSearch result;
  const long double l = lambda;
  const RealMat t{1, l, 0, 1};
  const RealMat s{0, 1, -1, 0};
  const RealMat st = s * t;
  const long double floor = options.identity_floor;
  const long double eps = options.epsilon;

  // S T has trace -lambda, so it rotates by theta = arccos(-lambda/2).
  const long double pi = std::numbers::pi_v<long double>;
  const long double theta = std::acos(-l / 2.0L);
  for (const auto& c : convergents(theta / pi, options.max_power)) {
    if (c.denominator < 1) continue;
    const std::int64_t q = c.denominator;
    ++result.powers_tried;
    const RealMat p = power(st, q);
    const long double d = distance_pm_identity(p);
    if (d <= floor) {
      result.commensurable_rotation = true;
      break;
    }
    if (d < eps) {
      result.witness = Witness{HeckeWord::st_power(q), static_cast<double>(d),
                               "power", q};
      return result;
    }
    if (options.use_commutators) {
      const RealMat conj = t * p * t.inverse();
      const RealMat comm = p * conj * p.inverse() * conj.inverse();
      const long double dc = distance_pm_identity(comm);
      if (dc > floor && dc < eps) {
        const HeckeWord pw = HeckeWord::st_power(q);
        const HeckeWord tw = HeckeWord::from_syllables({Syllable::t(1)});
        const HeckeWord cw = tw * pw * tw.inverse();
        result.witness = Witness{pw * cw * pw.inverse() * cw.inverse(),
                                 static_cast<double>(dc), "commutator", q};
        return result;
      }
    }
  }

  // Breadth-first over reduced words, letters S < T < T^-1.
  const std::array<RealMat, 3> letters{s, t, t.inverse()};
  const std::array<Syllable, 3> syllables{Syllable::s(), Syllable::t(1),
                                          Syllable::t(-1)};
  std::set<MatKey> seen{matrix_key(RealMat::identity())};
  std::vector<BfsEntry> frontier{{HeckeWord(), RealMat::identity(), -1}};
  const int workers = std::max(1, options.threads);
  for (int len = 1; len <= options.max_bfs_length && !frontier.empty(); ++len) {
    struct Child {
      std::size_t parent;
      int letter;
      RealMat matrix;
    };
    std::vector<Child> children;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      const int last = frontier[i].last;
      for (int letter = 0; letter < 3; ++letter) {
        if (last == 0 && letter == 0) continue;  // S S = -I
        if ((last == 1 && letter == 2) || (last == 2 && letter == 1)) continue;
        children.push_back({i, letter, {}});
      }
    }
    auto fill = [&](std::size_t begin, std::size_t stride) {
      for (std::size_t i = begin; i < children.size(); i += stride) {
        children[i].matrix =
            frontier[children[i].parent].matrix * letters[children[i].letter];
      }
    };
    if (workers > 1 && children.size() > 1024) {
      std::vector<std::future<void>> futures;
      for (int w = 0; w < workers; ++w) {
        futures.push_back(std::async(std::launch::async, fill,
                                     static_cast<std::size_t>(w),
                                     static_cast<std::size_t>(workers)));
      }
      for (auto& f : futures) f.get();
    } else {
      fill(0, 1);
    }

    std::vector<BfsEntry> next;
    for (const auto& child : children) {
      ++result.words_explored;
      if (!seen.insert(matrix_key(child.matrix)).second) continue;
      const long double d = distance_pm_identity(child.matrix);
      if (d <= floor) continue;
      HeckeWord word = frontier[child.parent].word *
                       HeckeWord::from_syllables({syllables[child.letter]});
      if (d < eps) {
        result.witness = Witness{std::move(word), static_cast<double>(d), "bfs", 0};
        return result;
      }
      next.push_back({std::move(word), child.matrix, child.letter});
    }
    frontier = std::move(next);
  }
  return result;
}

// --- decision ----------------------------------------------------------------

const char* verdict_tag_name(VerdictTag tag) {
  switch (tag) {
    case VerdictTag::kDiscreteContinuous: return "discrete_continuous";
    case VerdictTag::kDiscreteHecke: return "discrete_hecke";
    case VerdictTag::kNonDiscrete: return "non_discrete";
    case VerdictTag::kUnresolved: return "unresolved";
  }
  return "unresolved";
}

namespace {

void certify(DiscretenessVerdict& v, int n) {
  v.n = n;
  if (n > kExactTableBound) {
    // Admissible, but beyond the exact table: no certificate, no claim.
    v.verdict = VerdictTag::kUnresolved;
    return;
  }
  v.certificate = verify_elliptic_relation(n);
  v.verdict = v.certificate->verified ? VerdictTag::kDiscreteHecke
                                      : VerdictTag::kUnresolved;
}

}  // namespace

DiscretenessVerdict discreteness_decision(double lambda,
                                          const DecisionOptions& options) {
  const LambdaMembership m = hecke_admissible(lambda, options.tol, options.n_max);
  DiscretenessVerdict v;
  v.lambda = lambda;
  if (m.branch == MembershipBranch::kContinuous) {
    v.verdict = VerdictTag::kDiscreteContinuous;
    return v;
  }
  if (m.branch == MembershipBranch::kDiscrete) {
    v.snapped = true;
    v.lambda_exact = "2cos(pi/" + std::to_string(m.n) + ")";
    certify(v, m.n);
    return v;
  }
  const WitnessSearch search = nondiscreteness_witness(lambda, options.witness);
  v.words_explored = search.words_explored;
  v.witness = search.witness;
  v.verdict = search.witness ? VerdictTag::kNonDiscrete : VerdictTag::kUnresolved;
  return v;
}

DiscretenessVerdict discreteness_decision(const AlgebraicNumber& lambda,
                                          const DecisionOptions& options) {
  if (lambda.sign() <= 0) throw DomainError("Hecke parameter must be positive");
  const int n = lambda.n();
  const AlgebraicNumber two = AlgebraicNumber::from_rational(n, Rational(2));
  if ((lambda - two).sign() >= 0) {
    DiscretenessVerdict v;
    v.lambda = lambda.to_double();
    v.lambda_exact = lambda.to_string() + " in Q(2cos(pi/" + std::to_string(n) + "))";
    v.verdict = VerdictTag::kDiscreteContinuous;
    return v;
  }
  if (lambda == AlgebraicNumber::generator(n)) {
    DiscretenessVerdict v;
    v.lambda = lambda.to_double();
    v.lambda_exact = "2cos(pi/" + std::to_string(n) + ")";
    certify(v, n);
    return v;
  }
  DiscretenessVerdict v = discreteness_decision(lambda.to_double(), options);
  if (!v.snapped) {
    v.lambda_exact = lambda.to_string() + " in Q(2cos(pi/" + std::to_string(n) + "))";
  }
  return v;
}

}  // namespace heckeindex
