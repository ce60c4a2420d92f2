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

#include "heckeindex/errors.hpp"

namespace heckeindex {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDomain: return "domain";
    case ErrorKind::kIncompatibleField: return "incompatible_field";
    case ErrorKind::kArithmetic: return "arithmetic";
    case ErrorKind::kDivisibility: return "divisibility";
    case ErrorKind::kMutationDivisibility: return "mutation_divisibility";
    case ErrorKind::kResource: return "resource";
    case ErrorKind::kToleranceConfig: return "tolerance_config";
    case ErrorKind::kInvalidMatrix: return "invalid_matrix";
    case ErrorKind::kNotLoxodromic: return "not_loxodromic";
    case ErrorKind::kModuliDomain: return "moduli_domain";
    case ErrorKind::kNoRealModulus: return "no_real_modulus";
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kInternal: return "internal";
  }
  return "unknown";
}

}  // namespace heckeindex
