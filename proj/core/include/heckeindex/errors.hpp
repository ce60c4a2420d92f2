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

#include <stdexcept>
#include <string>

namespace heckeindex {

// Error categories. The CLI maps these onto exit codes, so new kinds must be
// added to cli::exit_code_for as well.
enum class ErrorKind {
  kDomain,
  kIncompatibleField,
  kArithmetic,
  kDivisibility,
  kMutationDivisibility,
  kResource,
  kToleranceConfig,
  kInvalidMatrix,
  kNotLoxodromic,
  kModuliDomain,
  kNoRealModulus,
  kParse,
  kInternal,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what)
      : Error(ErrorKind::kDomain, what) {}
};

class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what)
      : Error(ErrorKind::kResource, what) {}
};

class ToleranceConfigError : public Error {
 public:
  explicit ToleranceConfigError(const std::string& what)
      : Error(ErrorKind::kToleranceConfig, what) {}
};

}  // namespace heckeindex
