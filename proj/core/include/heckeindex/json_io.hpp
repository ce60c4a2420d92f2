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

#include <nlohmann/json.hpp>

#include "heckeindex/algebraic.hpp"
#include "heckeindex/cluster.hpp"
#include "heckeindex/covering.hpp"
#include "heckeindex/hecke.hpp"
#include "heckeindex/laurent.hpp"
#include "heckeindex/membership.hpp"
#include "heckeindex/moebius.hpp"

namespace heckeindex {

using Json = nlohmann::json;

// Doubles are written rounded to 12 significant digits.
double round_significant(double value, int digits = 12);

// {"vars": [...], "terms": [{"exp": [...], "coef": "decimal"}, ...]}
Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

// {"n": n, "residue": ["c0", "c1", ...]}
Json to_json(const AlgebraicNumber& a);
AlgebraicNumber algebraic_from_json(const Json& j);

// {"rank": n, "B": [[...]], "cluster": [LaurentPoly...]}
Json to_json(const Seed& seed);
Seed seed_from_json(const Json& j);

// Seed file: {"B": [[...]], "rank": n}; cluster is x1..xn.
Seed seed_from_file_json(const Json& j);

// {"nodes": [...], "edges": [...]}
Json to_json(const ExchangeGraph& graph);
ExchangeGraph exchange_graph_from_json(const Json& j);

Json to_json(const LaurentReport& report);
LaurentReport laurent_report_from_json(const Json& j);

Json to_json(const std::vector<ClusterVariableRecord>& records);
std::vector<ClusterVariableRecord> cluster_variables_from_json(const Json& j);

// {"value": v, "admissible": bool, "branch": "continuous"|"discrete"|null,
//  "n": int|null, "residual": real}
Json to_json(const SetMembership& m);
SetMembership membership_from_json(const Json& j);

Json to_json(const Classification& c);
Classification classification_from_json(const Json& j);

Json to_json(const EllipticRelationProof& proof);
EllipticRelationProof relation_proof_from_json(const Json& j);

// {"lambda": ..., "verdict": ..., "n": int|null,
//  "witness": {"word": "...", "distance": real}|null, "exact_certificate": bool}
Json to_json(const DiscretenessVerdict& v);
DiscretenessVerdict verdict_from_json(const Json& j);

// {"t": real|"degenerate", "trace_squared": ..., "lambda": ...,
//  "jones": {...}, "hecke": {...}, "consistent": bool}
Json to_json(const BridgeReport& report);
BridgeReport bridge_report_from_json(const Json& j);

Json to_json(const EquivalenceReport& report);
EquivalenceReport equivalence_report_from_json(const Json& j);

}  // namespace heckeindex
