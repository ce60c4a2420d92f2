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
#include <vector>

namespace heckeindex {

struct Convergent {
  std::int64_t numerator;
  std::int64_t denominator;
};

// Continued-fraction convergents of x >= 0 with denominator <= max_denominator,
// in increasing denominator order. Stops early once a convergent reproduces x
// to within 1e-15 relative, so rational inputs terminate.
std::vector<Convergent> convergents(long double x,
                                    std::int64_t max_denominator);

}  // namespace heckeindex
