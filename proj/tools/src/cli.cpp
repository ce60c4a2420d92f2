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

#include "heckeindex_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "heckeindex/algebraic.hpp"
#include "heckeindex/cluster.hpp"
#include "heckeindex/covering.hpp"
#include "heckeindex/hecke.hpp"
#include "heckeindex/json_io.hpp"
#include "heckeindex/moebius.hpp"

namespace heckeindex::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::optional<OutputFormat> parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "dot") return OutputFormat::kDot;
  if (name == "text") return OutputFormat::kText;
  return std::nullopt;
}

double parse_real(const std::string& text, const std::string& what) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw UsageError(what + ": '" + text + "' is not a finite real number");
  }
  return value;
}

int parse_int(const std::string& text, const std::string& what) {
  int value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw UsageError(what + ": '" + text + "' is not an integer");
  }
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    const auto b = item.find_first_not_of(" \t\r");
    const auto e = item.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string real_text(double v) {
  std::ostringstream out;
  out.precision(12);
  out << v;
  return out.str();
}

// --- command state -----------------------------------------------------------

struct Globals {
  std::string config_path;
  std::string seed_file;
  std::string format;
  std::optional<double> tol;
  std::optional<double> epsilon;
  std::optional<int> n_max;
  std::optional<int> depth_cap;
  std::optional<int> threads;
  std::optional<std::int64_t> max_power;
  std::optional<int> max_bfs_length;
};

struct Context {
  RunConfig config;
  bool format_given = false;
  CommandResult* result = nullptr;

  OutputFormat format(OutputFormat fallback,
                      std::initializer_list<OutputFormat> allowed) const {
    const OutputFormat f = format_given ? config.output_format : fallback;
    if (std::find(allowed.begin(), allowed.end(), f) == allowed.end()) {
      throw UsageError(std::string("format '") + format_name(f) +
                       "' is not available for this command");
    }
    return f;
  }
  ExplorationOptions exploration() const {
    return {config.depth_cap, config.threads};
  }
  DecisionOptions decision() const {
    DecisionOptions o;
    o.tol = config.tol;
    o.n_max = config.n_max;
    o.witness.epsilon = config.epsilon_witness;
    o.witness.max_power = config.max_power;
    o.witness.max_bfs_length = config.max_bfs_length;
    o.witness.threads = config.threads;
    return o;
  }
  void note(std::string message) const {
    result->diagnostics.push_back(std::move(message));
  }
};

Seed load_seed(const std::string& choice, const std::string& seed_file) {
  std::string path;
  if (choice.empty()) {
    if (seed_file.empty()) throw UsageError("--seed or --seed-file is required");
    path = seed_file;
  } else if (choice == "annulus") {
    return annulus_seed();
  } else if (choice == "a2") {
    return a2_seed();
  } else if (choice.rfind("file:", 0) == 0) {
    path = choice.substr(5);
  } else {
    throw UsageError("unknown seed '" + choice + "' (annulus, a2 or file:<path>)");
  }
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::kParse, "seed file '" + path + "': " + e.what());
  }
  return seed_from_file_json(j);
}

std::vector<int> parse_word(const std::string& text) {
  std::vector<int> word;
  if (text.empty()) return word;
  for (const auto& item : split(text, ',')) word.push_back(parse_int(item, "--word"));
  return word;
}

std::string matrix_text(const ExchangeMatrix& m) {
  std::string out = "[";
  const auto rows = m.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      out += (j ? ", " : "") + std::to_string(rows[i][j]);
    }
    out += "]";
  }
  return out + "]";
}

std::string seed_text(const Seed& seed) {
  std::string out = "B = " + matrix_text(seed.matrix()) + "\n";
  for (int i = 0; i < seed.rank(); ++i) {
    out += "x" + std::to_string(i + 1) + " = " + seed.cluster()[i].to_string() + "\n";
  }
  return out;
}

std::string membership_text(const char* label, const SetMembership& m) {
  std::string out = std::string(label) + ": " + real_text(m.value) + " ";
  if (!m.admissible) {
    return out + "not admissible (distance " + real_text(m.residual) + ")\n";
  }
  out += branch_name(m.branch);
  if (m.branch == MembershipBranch::kDiscrete) out += " n=" + std::to_string(m.n);
  return out + "\n";
}

std::string bridge_text(const BridgeReport& r) {
  std::string out = "t: " + (r.modulus_t ? real_text(*r.modulus_t) : "degenerate") + "\n";
  out += "trace_squared: " + real_text(r.trace_squared);
  if (r.exact) out += " = " + r.trace_squared_exact;
  out += "\nlambda: " + real_text(r.lambda);
  if (r.exact) out += " = " + r.lambda_exact;
  out += "\n" + membership_text("jones", r.jones) + membership_text("hecke", r.hecke);
  return out + "consistent: " + (r.consistent ? "true" : "false") + "\n";
}

std::string verdict_text(const DiscretenessVerdict& v) {
  std::string out = "lambda: " + real_text(v.lambda);
  if (!v.lambda_exact.empty()) out += " = " + v.lambda_exact;
  out += "\nverdict: " + std::string(verdict_tag_name(v.verdict)) + "\n";
  if (v.n) out += "n: " + std::to_string(v.n) + "\n";
  if (v.certificate) {
    out += "certificate: (S T)^" + std::to_string(v.certificate->order) + " = " +
           (v.certificate->sign > 0 ? "+I" : "-I") + "\n";
  }
  if (v.witness) {
    out += "witness: " + v.witness->word.to_string() + "\n";
    out += "distance: " + real_text(v.witness->distance) + "\n";
  }
  return out;
}

// --- commands ----------------------------------------------------------------

struct Options {
  std::string seed;
  std::string word;
  int depth = 0;
  std::string matrix;
  std::string exact;
  std::string t;
  std::string v;
  std::string lambda;
  int n = 0;
  std::string grid = "4,5,6.25,100";
  std::string input;
};

void cmd_mutate(const Context& ctx, const Options& o, const Globals& g) {
  const Seed start = load_seed(o.seed, g.seed_file);
  const std::vector<int> word = parse_word(o.word);
  const Seed seed = mutate_word(start, word);
  switch (ctx.format(OutputFormat::kJson, {OutputFormat::kJson, OutputFormat::kText})) {
    case OutputFormat::kText:
      ctx.result->payload = "word: " + word_to_string(word) + "\n" + seed_text(seed);
      return;
    default: {
      Json j = to_json(seed);
      j["word"] = word;
      j["hash"] = seed_hash(seed);
      ctx.result->payload = dump(j);
    }
  }
}

void cmd_enumerate(const Context& ctx, const Options& o, const Globals& g) {
  const auto records =
      enumerate_cluster_variables(load_seed(o.seed, g.seed_file), o.depth, ctx.exploration());
  switch (ctx.format(OutputFormat::kJson,
                     {OutputFormat::kJson, OutputFormat::kCsv, OutputFormat::kText})) {
    case OutputFormat::kCsv:
      ctx.result->payload = cluster_variables_csv(records);
      return;
    case OutputFormat::kText: {
      std::string out;
      for (const auto& r : records) {
        out += "[" + word_to_string(r.word) + "] " + r.variable.to_string() + "\n";
      }
      ctx.result->payload = out;
      return;
    }
    default:
      ctx.result->payload = dump(to_json(records));
  }
}

void cmd_graph(const Context& ctx, const Options& o, const Globals& g) {
  const ExchangeGraph graph =
      exchange_graph(load_seed(o.seed, g.seed_file), o.depth, ctx.exploration());
  switch (ctx.format(OutputFormat::kJson,
                     {OutputFormat::kJson, OutputFormat::kDot, OutputFormat::kText})) {
    case OutputFormat::kDot:
      ctx.result->payload = to_dot(graph);
      return;
    case OutputFormat::kText:
      ctx.result->payload = "nodes: " + std::to_string(graph.nodes.size()) +
                            "\nedges: " + std::to_string(graph.edges.size()) + "\n";
      return;
    default:
      ctx.result->payload = dump(to_json(graph));
  }
}

void cmd_laurent(const Context& ctx, const Options& o, const Globals& g) {
  const LaurentReport report =
      check_laurent_phenomenon(load_seed(o.seed, g.seed_file), o.depth, ctx.exploration());
  if (!report.passed()) {
    ctx.note(std::to_string(report.violations.size()) + " violation(s) found");
  }
  switch (ctx.format(OutputFormat::kJson, {OutputFormat::kJson, OutputFormat::kText})) {
    case OutputFormat::kText: {
      std::string out = "seeds visited: " + std::to_string(report.seeds_visited) +
                        "\nvariables checked: " +
                        std::to_string(report.variables_checked) +
                        "\nlaurent: " + (report.all_laurent ? "yes" : "no") +
                        "\npositive: " + (report.all_positive ? "yes" : "no") + "\n";
      for (const auto& v : report.violations) {
        out += v.kind + " at [" + word_to_string(v.word) + "]: " + v.detail + "\n";
      }
      ctx.result->payload = out;
      return;
    }
    default:
      ctx.result->payload = dump(to_json(report));
  }
}

AnyMat2 parse_matrix(const std::string& entries_text, const std::string& exact) {
  const auto entries = split(entries_text, ',');
  if (entries.size() != 4) throw UsageError("--matrix needs four entries a,b,c,d");
  if (!exact.empty()) {
    if (exact.rfind("n:", 0) != 0) throw UsageError("--exact expects n:<n>");
    const int n = parse_int(exact.substr(2), "--exact");
    std::vector<AlgebraicNumber> v;
    for (const auto& e : entries) v.push_back(parse_algebraic(n, e));
    return AlgebraicMat2(v[0], v[1], v[2], v[3]);
  }
  std::vector<Rational> q;
  for (const auto& e : entries) {
    if (auto r = parse_rational(e)) q.push_back(*r);
  }
  if (q.size() == 4) return RationalMat2(q[0], q[1], q[2], q[3]);
  std::vector<double> d;
  for (const auto& e : entries) d.push_back(parse_real(e, "--matrix"));
  return ComplexMat2(d[0], d[1], d[2], d[3]);
}

const char* mode_name(const AnyMat2& m) {
  switch (m.index()) {
    case 0: return "rational";
    case 1: return "algebraic";
    default: return "complex";
  }
}

std::string classification_text(const Classification& c) {
  std::string out = std::string("kind: ") + transform_tag_name(c.kind.tag) + "\n";
  if (c.kind.tag == TransformTag::kEllipticFinite) {
    out += "order: " + std::to_string(c.kind.order) + "\n";
  }
  out += "trace_squared: " + real_text(c.trace_squared.real());
  if (c.trace_squared.imag() != 0.0) out += " + " + real_text(c.trace_squared.imag()) + "i";
  return out + "\nexact: " + (c.exact ? "true" : "false") + "\n";
}

void cmd_classify(const Context& ctx, const Options& o, const Globals&) {
  const AnyMat2 m = parse_matrix(o.matrix, o.exact);
  const Classification c = classify(m, ctx.config.tol);
  if (ctx.format(OutputFormat::kJson, {OutputFormat::kJson, OutputFormat::kText}) ==
      OutputFormat::kText) {
    ctx.result->payload = classification_text(c);
    return;
  }
  Json j = to_json(c);
  j["mode"] = mode_name(m);
  ctx.result->payload = dump(j);
}

void cmd_moebius_bridge(const Context& ctx, const Options& o, const Globals&) {
  if (o.t.empty() == o.v.empty()) throw UsageError("give exactly one of --t or --v");
  Json j;
  double t = 0.0;
  const AnyMat2 m = [&]() -> AnyMat2 {
    if (o.t.empty()) {
      t = modulus_from_trace_squared(parse_real(o.v, "--v"));
      return schottky_matrix(Complex(t, 0.0));
    }
    if (auto q = parse_rational(o.t)) {
      if (*q <= 1) throw ModuliDomainError("annulus modulus must satisfy t > 1");
      t = to_double(*q);
      j["trace_squared_exact"] = to_string(Rational(*q + 2 + 1 / *q));
      return schottky_matrix(*q);
    }
    t = parse_real(o.t, "--t");
    if (!(t > 1.0)) throw ModuliDomainError("annulus modulus must satisfy t > 1");
    return schottky_matrix(Complex(t, 0.0));
  }();
  const double tau = trace_squared_of_modulus(t);
  const Classification c = classify(m, ctx.config.tol);
  j["t"] = round_significant(t);
  j["trace_squared"] = round_significant(tau);
  j["lambda"] = round_significant(std::sqrt(tau));
  j["classification"] = to_json(c);
  if (!j.contains("trace_squared_exact")) j["trace_squared_exact"] = nullptr;
  if (ctx.format(OutputFormat::kJson, {OutputFormat::kJson, OutputFormat::kText}) ==
      OutputFormat::kText) {
    ctx.result->payload = "t: " + real_text(t) + "\ntrace_squared: " + real_text(tau) +
                          "\nlambda: " + real_text(std::sqrt(tau)) + "\n" +
                          classification_text(c);
    return;
  }
  ctx.result->payload = dump(j);
}

void cmd_index(const Context& ctx, const Options& o, const Globals&) {
  const IndexMembership m =
      jones_admissible(parse_real(o.v, "--v"), ctx.config.tol, ctx.config.n_max);
  if (ctx.format(OutputFormat::kJson, {OutputFormat::kJson, OutputFormat::kText}) ==
      OutputFormat::kText) {
    ctx.result->payload = membership_text("index", m);
    return;
  }
  ctx.result->payload = dump(to_json(m));
}

void cmd_table(const Context& ctx, const Options&, const Globals&) {
  const int n_max = ctx.config.n_max;
  switch (ctx.format(OutputFormat::kCsv, {OutputFormat::kCsv, OutputFormat::kJson})) {
    case OutputFormat::kJson: {
      Json rows = Json::array();
      for (int n = 3; n <= n_max; ++n) {
        rows.push_back({{"n", n},
                        {"index_value", round_significant(jones_discrete_value(n))},
                        {"lambda", round_significant(hecke_discrete_value(n))}});
      }
      ctx.result->payload = dump(rows);
      return;
    }
    default:
      ctx.result->payload = jones_discrete_table_csv(n_max);
  }
}

void cmd_discrete(const Context& ctx, const Options& o, const Globals&) {
  DiscretenessVerdict v;
  if (o.lambda.rfind("2cos:", 0) == 0) {
    const int n = parse_int(o.lambda.substr(5), "--lambda");
    if (n < 3) throw DomainError("2cos:n needs n >= 3");
    v = discreteness_decision(AlgebraicNumber::generator(n), ctx.decision());
  } else {
    v = discreteness_decision(parse_real(o.lambda, "--lambda"), ctx.decision());
  }
  if (v.snapped) {
    ctx.note("lambda " + real_text(v.lambda) + " snapped to " + v.lambda_exact);
  }
  if (v.verdict == VerdictTag::kUnresolved) {
    ctx.note("no certificate and no witness within the configured bounds");
    ctx.result->exit_code = kExitResource;
  }
  if (ctx.format(OutputFormat::kJson, {OutputFormat::kJson, OutputFormat::kText}) ==
      OutputFormat::kText) {
    ctx.result->payload = verdict_text(v);
    return;
  }
  ctx.result->payload = dump(to_json(v));
}

void cmd_relation(const Context& ctx, const Options& o, const Globals&) {
  const EllipticRelationProof p = verify_elliptic_relation(o.n);
  if (!p.verified) ctx.result->exit_code = kExitInternal;
  if (ctx.format(OutputFormat::kJson, {OutputFormat::kJson, OutputFormat::kText}) ==
      OutputFormat::kText) {
    std::string out = "lambda = " + p.lambda_exact + "\n";
    for (const auto& line : p.checked_powers) out += line + "\n";
    ctx.result->payload = out;
    return;
  }
  ctx.result->payload = dump(to_json(p));
}

void emit_bridges(const Context& ctx, const std::vector<std::string>& inputs,
                  const std::vector<BridgeReport>& reports, OutputFormat fallback) {
  switch (ctx.format(fallback,
                     {OutputFormat::kJson, OutputFormat::kCsv, OutputFormat::kText})) {
    case OutputFormat::kCsv:
      ctx.result->payload = bridge_reports_csv(inputs, reports);
      return;
    case OutputFormat::kText: {
      std::string out;
      for (std::size_t i = 0; i < reports.size(); ++i) {
        if (i) out += "\n";
        out += bridge_text(reports[i]);
      }
      ctx.result->payload = out;
      return;
    }
    default:
      if (reports.size() == 1 && fallback == OutputFormat::kJson) {
        ctx.result->payload = dump(to_json(reports.front()));
      } else {
        Json arr = Json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        ctx.result->payload = dump(arr);
      }
  }
}

void cmd_bridge(const Context& ctx, const Options& o, const Globals&) {
  if (o.t.empty() == (o.n == 0)) throw UsageError("give exactly one of --t or --n");
  BridgeReport r = o.t.empty()
                       ? discrete_branch_bridge(o.n, ctx.config.tol, ctx.config.n_max)
                       : annulus_to_orbifold_bridge(parse_real(o.t, "--t"),
                                                    ctx.config.tol, ctx.config.n_max);
  if (!r.consistent) ctx.note("memberships disagree");
  emit_bridges(ctx, {o.t.empty() ? std::to_string(o.n) : o.t}, {r}, OutputFormat::kJson);
}

void cmd_equivalence(const Context& ctx, const Options& o, const Globals&) {
  std::vector<double> grid;
  for (const auto& item : split(o.grid, ',')) grid.push_back(parse_real(item, "--grid"));
  if (ctx.config.n_max > kExactTableBound) {
    ctx.note("exact discrete checks capped at n = " + std::to_string(kExactTableBound));
  }
  const EquivalenceReport report = sqrt_set_equivalence(ctx.config.n_max, grid);
  if (!report.all_passed()) ctx.note("some equivalence items failed");
  if (ctx.format(OutputFormat::kJson, {OutputFormat::kJson, OutputFormat::kText}) ==
      OutputFormat::kText) {
    std::string out;
    for (const auto& i : report.items) {
      out += std::string(i.passed ? "PASS " : "FAIL ") + i.name + ": " + i.detail + "\n";
    }
    ctx.result->payload = out;
    return;
  }
  ctx.result->payload = dump(to_json(report));
}

void cmd_batch(const Context& ctx, const Options& o, const Globals&) {
  std::vector<std::string> inputs;
  std::vector<BridgeReport> reports;
  std::istringstream in(read_file(o.input));
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto cells = split(line, ',');
    if (cells.empty() || (cells.size() == 1 && cells[0].empty())) continue;
    if (line_no == 1 && cells[0] == "kind") continue;
    if (cells.size() != 2) {
      throw Error(ErrorKind::kParse, "batch line " + std::to_string(line_no) +
                                         ": expected kind,value");
    }
    if (cells[0] == "t") {
      reports.push_back(annulus_to_orbifold_bridge(parse_real(cells[1], "t value"),
                                                   ctx.config.tol, ctx.config.n_max));
    } else if (cells[0] == "n") {
      reports.push_back(discrete_branch_bridge(parse_int(cells[1], "n value"),
                                               ctx.config.tol, ctx.config.n_max));
    } else {
      throw Error(ErrorKind::kParse, "batch line " + std::to_string(line_no) +
                                         ": kind must be t or n");
    }
    inputs.push_back(cells[1]);
  }
  emit_bridges(ctx, inputs, reports, OutputFormat::kCsv);
}

RunConfig resolve_config(const Globals& g, bool& format_given) {
  RunConfig c;
  format_given = false;
  if (!g.config_path.empty()) {
    Json j;
    try {
      j = Json::parse(read_file(g.config_path));
    } catch (const Json::parse_error& e) {
      throw Error(ErrorKind::kParse, "config '" + g.config_path + "': " + e.what());
    }
    c = config_from_json(j);
    format_given = j.contains("output_format");
  }
  if (g.tol) c.tol = *g.tol;
  if (g.epsilon) c.epsilon_witness = *g.epsilon;
  if (g.n_max) c.n_max = *g.n_max;
  if (g.depth_cap) c.depth_cap = *g.depth_cap;
  if (g.threads) c.threads = *g.threads;
  if (g.max_power) c.max_power = *g.max_power;
  if (g.max_bfs_length) c.max_bfs_length = *g.max_bfs_length;
  if (!g.format.empty()) {
    auto f = parse_format(g.format);
    if (!f) throw UsageError("unknown format '" + g.format + "'");
    c.output_format = *f;
    format_given = true;
  }
  validate(c);
  return c;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse: return kExitUsage;
    case ErrorKind::kResource: return kExitResource;
    case ErrorKind::kInternal: return kExitInternal;
    default: return kExitDomain;
  }
}

}  // namespace

const char* format_name(OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson: return "json";
    case OutputFormat::kCsv: return "csv";
    case OutputFormat::kDot: return "dot";
    case OutputFormat::kText: return "text";
  }
  return "json";
}

RunConfig config_from_json(const Json& j, RunConfig c) {
  if (!j.is_object()) throw UsageError("config must be a JSON object");
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "tol") {
        c.tol = value.get<double>();
      } else if (key == "epsilon_witness") {
        c.epsilon_witness = value.get<double>();
      } else if (key == "max_word_len") {
        if (value.is_object()) {
          if (value.contains("power")) c.max_power = value.at("power").get<std::int64_t>();
          if (value.contains("bfs")) c.max_bfs_length = value.at("bfs").get<int>();
        } else {
          c.max_power = value.get<std::int64_t>();
        }
      } else if (key == "n_max") {
        c.n_max = value.get<int>();
      } else if (key == "depth_cap") {
        c.depth_cap = value.get<int>();
      } else if (key == "threads") {
        c.threads = value.get<int>();
      } else if (key == "output_format") {
        auto f = parse_format(value.get<std::string>());
        if (!f) throw UsageError("unknown output_format in config");
        c.output_format = *f;
      } else {
        throw UsageError("unknown config key '" + key + "'");
      }
    }
  } catch (const Json::exception& e) {
    throw UsageError(std::string("config: ") + e.what());
  }
  return c;
}

void validate(const RunConfig& c) {
  if (!(c.tol > 0.0) || !(c.epsilon_witness > 0.0) || c.max_power < 1 ||
      c.max_bfs_length < 1 || c.n_max < 3 || c.depth_cap < 1 || c.threads < 1) {
    throw UsageError(
        "config values must be positive (n_max >= 3, threads >= 1)");
  }
  // Both set levels reject a tolerance that cannot separate their points.
  jones_admissible(5.0, c.tol, c.n_max);
  hecke_admissible(2.5, c.tol, c.n_max);
}

CommandResult run(const std::vector<std::string>& args) {
  CommandResult result;
  Globals g;
  Options o;
  CLI::App app{"Cluster mutation, Hecke discreteness and index/lambda bridges",
               "heckeindex"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--config", g.config_path, "JSON run configuration");
  app.add_option("--tol", g.tol, "Membership tolerance");
  app.add_option("--seed-file", g.seed_file, "Seed file used when --seed is absent");
  app.add_option("--format", g.format, "json, csv, dot or text");
  app.add_option("--threads", g.threads, "Worker threads");
  app.add_option("--depth-cap", g.depth_cap, "Largest exploration depth");
  app.add_option("--epsilon", g.epsilon, "Witness distance bound");
  app.add_option("--nmax", g.n_max, "Largest discrete n");
  app.add_option("--max-power", g.max_power, "Largest power on the witness fast path");
  app.add_option("--max-bfs-length", g.max_bfs_length, "Letter bound of the word search");

  using Handler = std::function<void(const Context&, const Options&, const Globals&)>;
  std::vector<std::pair<CLI::App*, Handler>> handlers;

  auto* mutate_cmd = app.add_subcommand("mutate", "Mutate a seed along a word");
  mutate_cmd->add_option("--seed", o.seed, "annulus, a2 or file:<path>");
  mutate_cmd->add_option("--word", o.word, "Directions, e.g. 1,2,1")->required();
  handlers.emplace_back(mutate_cmd, cmd_mutate);

  auto* cluster = app.add_subcommand("cluster", "Cluster exploration");
  cluster->require_subcommand(1);
  auto add_cluster = [&](const char* name, const char* help, Handler h) {
    auto* sub = cluster->add_subcommand(name, help);
    sub->add_option("--seed", o.seed, "annulus, a2 or file:<path>");
    sub->add_option("--depth", o.depth, "Mutation depth")->required()->check(
        CLI::NonNegativeNumber);
    handlers.emplace_back(sub, std::move(h));
  };
  add_cluster("enumerate", "Distinct cluster variables", cmd_enumerate);
  add_cluster("graph", "Exchange graph", cmd_graph);
  add_cluster("laurent-check", "Laurent and positivity check", cmd_laurent);

  auto* moebius = app.add_subcommand("moebius", "Moebius transformations");
  moebius->require_subcommand(1);
  auto* classify_cmd = moebius->add_subcommand("classify", "Classify a matrix");
  classify_cmd->add_option("--matrix", o.matrix, "a,b,c,d")->required();
  classify_cmd->add_option("--exact", o.exact, "n:<n> for entries in Q(2cos(pi/n))");
  handlers.emplace_back(classify_cmd, cmd_classify);
  auto* mbridge = moebius->add_subcommand("bridge", "Annulus modulus and trace");
  mbridge->add_option("--t", o.t, "Modulus t > 1");
  mbridge->add_option("--v", o.v, "Trace squared v >= 4");
  handlers.emplace_back(mbridge, cmd_moebius_bridge);
  auto* index_cmd = moebius->add_subcommand("index", "Admissible index test");
  index_cmd->add_option("--v", o.v, "Index value")->required();
  handlers.emplace_back(index_cmd, cmd_index);
  auto* table_cmd = moebius->add_subcommand("table", "Discrete index values");
  handlers.emplace_back(table_cmd, cmd_table);

  auto* hecke = app.add_subcommand("hecke", "Hecke groups");
  hecke->require_subcommand(1);
  auto* discrete_cmd = hecke->add_subcommand("discrete", "Discreteness decision");
  discrete_cmd->add_option("--lambda", o.lambda, "Real value or 2cos:n")->required();
  handlers.emplace_back(discrete_cmd, cmd_discrete);
  auto* relation_cmd = hecke->add_subcommand("relation", "Exact (S T)^n certificate");
  relation_cmd->add_option("--n", o.n, "n")->required();
  handlers.emplace_back(relation_cmd, cmd_relation);

  auto* bridge = app.add_subcommand("bridge", "Index/lambda bridge");
  bridge->require_subcommand(0, 1);
  bridge->add_option("--t", o.t, "Annulus modulus t > 1");
  bridge->add_option("--n", o.n, "Discrete branch n");
  auto* equiv_cmd = bridge->add_subcommand("equivalence", "Square-root set check");
  equiv_cmd->add_option("--grid", o.grid, "Continuous-part sample values");
  handlers.emplace_back(equiv_cmd, cmd_equivalence);
  auto* batch_cmd = bridge->add_subcommand("batch", "Bridge reports from a CSV");
  batch_cmd->add_option("--input", o.input, "CSV of kind,value rows")->required();
  handlers.emplace_back(batch_cmd, cmd_batch);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    Context ctx;
    ctx.result = &result;
    ctx.config = resolve_config(g, ctx.format_given);
    Handler handler;
    for (const auto& [sub, h] : handlers) {
      if (sub->parsed()) handler = h;
    }
    if (!handler && bridge->parsed()) handler = cmd_bridge;
    if (!handler) throw UsageError("incomplete command");
    handler(ctx, o, g);
  } catch (const CLI::CallForHelp&) {
    result.payload = app.help();
  } catch (const CLI::CallForAllHelp&) {
    result.payload = app.help("", CLI::AppFormatMode::All);
  } catch (const CLI::ParseError& e) {
    result.exit_code = kExitUsage;
    result.diagnostics.push_back(std::string("usage: ") + e.what());
  } catch (const UsageError& e) {
    result.exit_code = kExitUsage;
    result.diagnostics.push_back(std::string("usage: ") + e.what());
  } catch (const Error& e) {
    result.exit_code = exit_code_for(e.kind());
    result.diagnostics.push_back(std::string(error_kind_name(e.kind())) + ": " + e.what());
  } catch (const std::exception& e) {
    result.exit_code = kExitInternal;
    result.diagnostics.push_back(std::string("internal: ") + e.what());
  }
  if (result.exit_code != kExitOk && result.exit_code != kExitResource) {
    result.payload.clear();
  }
  return result;
}

}  // namespace heckeindex::cli
