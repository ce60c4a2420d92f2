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

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "heckeindex/errors.hpp"
#include "heckeindex/laurent.hpp"

namespace heckeindex {

/// Skew-symmetric integer exchange matrix, row-major.
class ExchangeMatrix {
 public:
  ExchangeMatrix() = default;
  // Throws DomainError unless the rows form a square skew-symmetric matrix.
  explicit ExchangeMatrix(const std::vector<std::vector<int>>& rows);

  int rank() const { return rank_; }
  // 0-based indices.
  int at(int i, int j) const { return entries_[i * rank_ + j]; }
  std::vector<std::vector<int>> rows() const;

  bool operator==(const ExchangeMatrix&) const = default;
  auto operator<=>(const ExchangeMatrix&) const = default;

 private:
  friend ExchangeMatrix mutate_matrix(const ExchangeMatrix&, int);
  friend ExchangeMatrix permute_matrix(const ExchangeMatrix&,
                                       const std::vector<int>&);
  int rank_ = 0;
  std::vector<int> entries_;
};

// Matrix half of the exchange relations; k is 1-based.
ExchangeMatrix mutate_matrix(const ExchangeMatrix& matrix, int k);
// Entry (i, j) of the result is entry (perm[i], perm[j]) of the input.
ExchangeMatrix permute_matrix(const ExchangeMatrix& matrix,
                              const std::vector<int>& perm);

/// A cluster of Laurent polynomials in the initial variables together with
/// its exchange matrix.
class Seed {
 public:
  // Throws DomainError if the cluster length differs from the rank or an
  // entry is zero.
  Seed(std::vector<LaurentPoly> cluster, ExchangeMatrix matrix);

  int rank() const { return matrix_.rank(); }
  const std::vector<LaurentPoly>& cluster() const { return cluster_; }
  const ExchangeMatrix& matrix() const { return matrix_; }

  bool operator==(const Seed&) const = default;

 private:
  std::vector<LaurentPoly> cluster_;
  ExchangeMatrix matrix_;
};

class MutationDivisibilityError : public Error {
 public:
  MutationDivisibilityError(const std::string& what, int direction)
      : Error(ErrorKind::kMutationDivisibility, what), direction_(direction) {}
  int direction() const { return direction_; }

 private:
  int direction_;
};

/// Mutation in direction k (1-based). The new variable is computed by exact
/// Laurent division; a nonzero remainder raises MutationDivisibilityError.
Seed mutate(const Seed& seed, int k);

// Applies mutate for each direction in order.
Seed mutate_word(const Seed& seed, const std::vector<int>& word);

// Standard cluster x1..xn with the given matrix.
Seed initial_seed(const ExchangeMatrix& matrix);
// Kronecker seed of the annulus with one marked point per boundary.
Seed annulus_seed();
// Finite type A2.
Seed a2_seed();

/// Sorts the cluster by LaurentPoly::compare and permutes B to match; among
/// orderings of tied entries the lexicographically least matrix wins.
Seed canonicalize(const Seed& seed);

// Stable serialization of the canonical seed, used as the dedup key.
std::string canonical_key(const Seed& seed);
// 16 hex digits of FNV-1a over canonical_key(canonicalize(seed)).
std::string seed_hash(const Seed& seed);

inline constexpr int kDefaultDepthCap = 12;

struct ExplorationOptions {
  int depth_cap = kDefaultDepthCap;
  // Frontier expansion workers; results do not depend on this.
  int threads = 1;
};

struct ClusterVariableRecord {
  // Mutation word (1-based directions) of the first seed containing it.
  std::vector<int> word;
  LaurentPoly variable;
};

/// Distinct cluster variables over all seeds reachable with at most
/// max_mutations mutations, in breadth-first discovery order.
/// Throws ResourceError if max_mutations exceeds options.depth_cap.
std::vector<ClusterVariableRecord> enumerate_cluster_variables(
    const Seed& seed, int max_mutations, const ExplorationOptions& options = {});

struct LaurentViolation {
  std::vector<int> word;
  std::string kind;  // "divisibility" or "negative_coefficient"
  std::string detail;
};

struct LaurentReport {
  int max_mutations = 0;
  std::size_t seeds_visited = 0;
  std::size_t variables_checked = 0;
  bool all_laurent = true;
  bool all_positive = true;
  std::vector<LaurentViolation> violations;

  bool passed() const { return all_laurent && all_positive; }
};

LaurentReport check_laurent_phenomenon(const Seed& seed, int max_mutations,
                                       const ExplorationOptions& options = {});

struct ExchangeGraphNode {
  int id = 0;
  Seed canonical_seed;
  int depth = 0;
  std::vector<int> word;
  // (direction k, node id); k refers to the seed reached along `word`.
  std::vector<std::pair<int, int>> neighbors;
  std::string hash;
};

struct ExchangeGraphEdge {
  int source = 0;
  int target = 0;
  int direction = 0;
  bool operator==(const ExchangeGraphEdge&) const = default;
};

struct ExchangeGraph {
  std::vector<ExchangeGraphNode> nodes;
  std::vector<ExchangeGraphEdge> edges;
};

/// Breadth-first exchange graph of canonicalized seeds up to max_depth.
/// Nodes at the last layer are still mutated once so edges between them are
/// recorded, but no node deeper than max_depth is added.
ExchangeGraph exchange_graph(const Seed& seed, int max_depth,
                             const ExplorationOptions& options = {});

std::string to_dot(const ExchangeGraph& graph);

// Columns: mutation_word,variable_canonical_string,num_terms,all_positive
std::string cluster_variables_csv(
    const std::vector<ClusterVariableRecord>& records);

std::string word_to_string(const std::vector<int>& word);

}  // namespace heckeindex
