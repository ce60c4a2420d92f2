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

#include "heckeindex/cluster.hpp"

#include <algorithm>
#include <cstdint>
#include <future>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>
#include <variant>

namespace heckeindex {

ExchangeMatrix::ExchangeMatrix(const std::vector<std::vector<int>>& rows)
    : rank_(static_cast<int>(rows.size())) {
  if (rank_ == 0) throw DomainError("exchange matrix must have rank >= 1");
  entries_.reserve(static_cast<std::size_t>(rank_ * rank_));
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != rank_) {
      throw DomainError("exchange matrix must be square");
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) {
      if (at(i, j) != -at(j, i)) {
        throw DomainError("exchange matrix is not skew-symmetric at (" +
                          std::to_string(i + 1) + "," + std::to_string(j + 1) +
                          ")");
      }
    }
  }
}

std::vector<std::vector<int>> ExchangeMatrix::rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(rank_));
  for (int i = 0; i < rank_; ++i) {
    out[i].assign(entries_.begin() + i * rank_,
                  entries_.begin() + (i + 1) * rank_);
  }
  return out;
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& matrix, int k) {
  const int n = matrix.rank();
  if (k < 1 || k > n) {
    throw DomainError("mutation direction " + std::to_string(k) +
                      " outside 1.." + std::to_string(n));
  }
  const int kk = k - 1;
  ExchangeMatrix out = matrix;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int bij = matrix.at(i, j);
      int value;
      if (i == kk || j == kk) {
        value = -bij;
      } else {
        const int bik = matrix.at(i, kk);
        const int bkj = matrix.at(kk, j);
        value = bij + (std::abs(bik) * bkj + bik * std::abs(bkj)) / 2;
      }
      out.entries_[i * n + j] = value;
    }
  }
  return out;
}

ExchangeMatrix permute_matrix(const ExchangeMatrix& matrix,
                              const std::vector<int>& perm) {
  const int n = matrix.rank();
  ExchangeMatrix out = matrix;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out.entries_[i * n + j] = matrix.at(perm[i], perm[j]);
    }
  }
  return out;
}

Seed::Seed(std::vector<LaurentPoly> cluster, ExchangeMatrix matrix)
    : cluster_(std::move(cluster)), matrix_(std::move(matrix)) {
  if (static_cast<int>(cluster_.size()) != matrix_.rank()) {
    throw DomainError("cluster length " + std::to_string(cluster_.size()) +
                      " differs from matrix rank " +
                      std::to_string(matrix_.rank()));
  }
  for (const auto& x : cluster_) {
    if (x.is_zero()) throw DomainError("cluster variables must be nonzero");
  }
}

Seed mutate(const Seed& seed, int k) {
  const int n = seed.rank();
  if (k < 1 || k > n) {
    throw DomainError("mutation direction " + std::to_string(k) +
                      " outside 1.." + std::to_string(n));
  }
  const int kk = k - 1;
  const auto& x = seed.cluster();
  const auto& vars = x[kk].variables();
  // Empty products are 1.
  LaurentPoly positive = LaurentPoly::constant(vars, Integer(1));
  LaurentPoly negative = LaurentPoly::constant(vars, Integer(1));
  for (int i = 0; i < n; ++i) {
    const int b = seed.matrix().at(i, kk);
    if (b > 0) positive = positive * x[i].pow(static_cast<unsigned>(b));
    if (b < 0) negative = negative * x[i].pow(static_cast<unsigned>(-b));
  }
  std::vector<LaurentPoly> cluster = x;
  try {
    cluster[kk] = exact_div(positive + negative, x[kk]);
  } catch (const DivisibilityError& e) {
    throw MutationDivisibilityError(
        "exchange binomial not divisible by x_" + std::to_string(k) + ": " +
            e.what(),
        k);
  }
  return Seed(std::move(cluster), mutate_matrix(seed.matrix(), k));
}

Seed mutate_word(const Seed& seed, const std::vector<int>& word) {
  Seed current = seed;
  for (int k : word) current = mutate(current, k);
  return current;
}

Seed initial_seed(const ExchangeMatrix& matrix) {
  const auto vars = standard_variables(matrix.rank());
  std::vector<LaurentPoly> cluster;
  for (int i = 0; i < matrix.rank(); ++i) {
    cluster.push_back(LaurentPoly::variable(vars, i));
  }
  return Seed(std::move(cluster), matrix);
}

Seed annulus_seed() {
  return initial_seed(ExchangeMatrix({{0, 2}, {-2, 0}}));
}

Seed a2_seed() { return initial_seed(ExchangeMatrix({{0, 1}, {-1, 0}})); }

Seed canonicalize(const Seed& seed) {
  const int n = seed.rank();
  const auto& cluster = seed.cluster();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return cluster[a].compare(cluster[b]) < 0;
  });

  // Runs of equal cluster entries may be reordered freely; keep the
  // lexicographically least matrix over those reorderings.
  std::vector<std::pair<int, int>> runs;
  for (int i = 0; i < n;) {
    int j = i + 1;
    while (j < n && cluster[order[i]] == cluster[order[j]]) ++j;
    if (j - i > 1) runs.emplace_back(i, j);
    i = j;
  }
  std::vector<int> best = order;
  if (!runs.empty()) {
    ExchangeMatrix best_matrix = permute_matrix(seed.matrix(), order);
    std::vector<int> perm = order;
    for (auto& [lo, hi] : runs) std::sort(perm.begin() + lo, perm.begin() + hi);
    std::size_t budget = 40320;
    while (budget-- > 0) {
      ExchangeMatrix candidate = permute_matrix(seed.matrix(), perm);
      if (candidate < best_matrix) {
        best_matrix = candidate;
        best = perm;
      }
      // Odometer over the runs.
      std::size_t r = 0;
      for (; r < runs.size(); ++r) {
        auto [lo, hi] = runs[r];
        if (std::next_permutation(perm.begin() + lo, perm.begin() + hi)) break;
      }
      if (r == runs.size()) break;
    }
  }
  std::vector<LaurentPoly> sorted;
  sorted.reserve(cluster.size());
  for (int i : best) sorted.push_back(cluster[i]);
  return Seed(std::move(sorted), permute_matrix(seed.matrix(), best));
}

std::string canonical_key(const Seed& seed) {
  const Seed canon = canonicalize(seed);
  std::string key;
  for (const auto& x : canon.cluster()) {
    key += x.to_string();
    key += ';';
  }
  key += '|';
  for (const auto& row : canon.matrix().rows()) {
    for (int v : row) {
      key += std::to_string(v);
      key += ',';
    }
  }
  return key;
}

std::string seed_hash(const Seed& seed) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : canonical_key(seed)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 0xF];
    h >>= 4;
  }
  return out;
}

std::string word_to_string(const std::vector<int>& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) out += '-';
    out += std::to_string(word[i]);
  }
  return out;
}

namespace {

struct ExploredNode {
  Seed rep;
  std::string key;
  int depth;
  std::vector<int> word;
  std::vector<std::pair<int, int>> neighbors;
};

struct Exploration {
  std::vector<ExploredNode> nodes;
  std::vector<ExchangeGraphEdge> edges;
  std::vector<LaurentViolation> violations;
};

struct MutationJob {
  int node;
  int direction;
};

using JobResult = std::variant<Seed, std::string>;

JobResult run_job(const Exploration& ex, const MutationJob& job) {
  try {
    return mutate(ex.nodes[job.node].rep, job.direction);
  } catch (const MutationDivisibilityError& e) {
    return std::string(e.what());
  }
}

std::vector<JobResult> run_jobs(const Exploration& ex,
                                const std::vector<MutationJob>& jobs,
                                int threads) {
  std::vector<std::optional<JobResult>> slots(jobs.size());
  const std::size_t workers =
      std::clamp<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)),
                              1, std::max<std::size_t>(jobs.size(), 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) slots[i] = run_job(ex, jobs[i]);
  } else {
    std::vector<std::future<void>> futures;
    for (std::size_t w = 0; w < workers; ++w) {
      futures.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t i = w; i < jobs.size(); i += workers) {
          slots[i] = run_job(ex, jobs[i]);
        }
      }));
    }
    for (auto& f : futures) f.get();
  }
  std::vector<JobResult> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

void validate_depth(int depth, const ExplorationOptions& options) {
  if (depth < 0) throw DomainError("mutation depth must be nonnegative");
  if (depth > options.depth_cap) {
    throw ResourceError("depth " + std::to_string(depth) +
                        " exceeds the depth cap " +
                        std::to_string(options.depth_cap));
  }
}

// Breadth-first over canonical seeds. Layer max_depth is expanded only when
// close_last_layer is set, and then only for edges to known nodes.
Exploration explore(const Seed& root, int max_depth, bool close_last_layer,
                    const ExplorationOptions& options) {
  Exploration ex;
  std::unordered_map<std::string, int> index;
  std::set<std::pair<int, int>> edge_set;
  ex.nodes.push_back({root, canonical_key(root), 0, {}, {}});
  index.emplace(ex.nodes[0].key, 0);

  std::vector<int> frontier{0};
  const int n = root.rank();
  for (int depth = 0; !frontier.empty(); ++depth) {
    const bool last = depth >= max_depth;
    if (last && !close_last_layer) break;

    std::vector<MutationJob> jobs;
    for (int id : frontier) {
      const auto& word = ex.nodes[id].word;
      for (int k = 1; k <= n; ++k) {
        // Undoing the last step returns to the parent, already linked.
        if (!word.empty() && word.back() == k) continue;
        jobs.push_back({id, k});
      }
    }
    std::vector<JobResult> results = run_jobs(ex, jobs, options.threads);

    std::vector<int> next;
    for (std::size_t j = 0; j < jobs.size(); ++j) {
      const auto [u, k] = jobs[j];
      std::vector<int> word = ex.nodes[u].word;
      word.push_back(k);
      if (auto* err = std::get_if<std::string>(&results[j])) {
        ex.violations.push_back({word, "divisibility", *err});
        continue;
      }
      Seed& seed = std::get<Seed>(results[j]);
      std::string key = canonical_key(seed);
      int v;
      if (auto it = index.find(key); it != index.end()) {
        v = it->second;
      } else {
        if (last) continue;
        v = static_cast<int>(ex.nodes.size());
        index.emplace(key, v);
        ex.nodes.push_back({std::move(seed), std::move(key), depth + 1, word, {}});
        ex.nodes[v].neighbors.emplace_back(k, u);
        next.push_back(v);
      }
      ex.nodes[u].neighbors.emplace_back(k, v);
      if (u != v && edge_set.emplace(std::min(u, v), std::max(u, v)).second) {
        ex.edges.push_back({u, v, k});
      }
    }
    frontier = std::move(next);
  }
  for (auto& node : ex.nodes) {
    std::sort(node.neighbors.begin(), node.neighbors.end());
    node.neighbors.erase(std::unique(node.neighbors.begin(), node.neighbors.end()),
                         node.neighbors.end());
  }
  return ex;
}

}  // namespace

std::vector<ClusterVariableRecord> enumerate_cluster_variables(
    const Seed& seed, int max_mutations, const ExplorationOptions& options) {
  validate_depth(max_mutations, options);
  const Exploration ex = explore(seed, max_mutations, false, options);
  if (!ex.violations.empty()) {
    throw MutationDivisibilityError(ex.violations.front().detail,
                                    ex.violations.front().word.back());
  }
  std::vector<ClusterVariableRecord> records;
  std::set<std::string> seen;
  for (const auto& node : ex.nodes) {
    for (const auto& x : node.rep.cluster()) {
      if (seen.insert(x.to_string()).second) records.push_back({node.word, x});
    }
  }
  return records;
}

LaurentReport check_laurent_phenomenon(const Seed& seed, int max_mutations,
                                       const ExplorationOptions& options) {
  validate_depth(max_mutations, options);
  const Exploration ex = explore(seed, max_mutations, false, options);
  LaurentReport report;
  report.max_mutations = max_mutations;
  report.seeds_visited = ex.nodes.size();
  report.violations = ex.violations;
  report.all_laurent = ex.violations.empty();
  std::set<std::string> seen;
  for (const auto& node : ex.nodes) {
    for (const auto& x : node.rep.cluster()) {
      std::string s = x.to_string();
      if (!seen.insert(s).second) continue;
      if (!is_positive(x)) {
        report.all_positive = false;
        report.violations.push_back({node.word, "negative_coefficient", s});
      }
    }
  }
  report.variables_checked = seen.size();
  return report;
}

ExchangeGraph exchange_graph(const Seed& seed, int max_depth,
                             const ExplorationOptions& options) {
  validate_depth(max_depth, options);
  Exploration ex = explore(seed, max_depth, true, options);
  if (!ex.violations.empty()) {
    throw MutationDivisibilityError(ex.violations.front().detail,
                                    ex.violations.front().word.back());
  }
  ExchangeGraph graph;
  for (std::size_t i = 0; i < ex.nodes.size(); ++i) {
    auto& node = ex.nodes[i];
    Seed canon = canonicalize(node.rep);
    std::string hash = seed_hash(canon);
    graph.nodes.push_back({static_cast<int>(i), std::move(canon), node.depth,
                           node.word, node.neighbors, std::move(hash)});
  }
  graph.edges = std::move(ex.edges);
  return graph;
}

std::string to_dot(const ExchangeGraph& graph) {
  std::ostringstream out;
  out << "graph exchange {\n";
  for (const auto& node : graph.nodes) {
    out << "  n" << node.id << " [label=\"d=" << node.depth << "\\n"
        << node.hash << "\"];\n";
  }
  for (const auto& e : graph.edges) {
    out << "  n" << e.source << " -- n" << e.target << " [label=\""
        << e.direction << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string cluster_variables_csv(
    const std::vector<ClusterVariableRecord>& records) {
  std::ostringstream out;
  out << "mutation_word,variable_canonical_string,num_terms,all_positive\n";
  for (const auto& r : records) {
    out << word_to_string(r.word) << ',' << r.variable.to_string() << ','
        << r.variable.num_terms() << ','
        << (is_positive(r.variable) ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace heckeindex
