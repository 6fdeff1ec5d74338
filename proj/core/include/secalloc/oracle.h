// Copyright 2026 The secalloc Authors
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

#ifndef SECALLOC_ORACLE_H_
#define SECALLOC_ORACLE_H_

#include "secalloc/model.h"

namespace secalloc {

inline constexpr int kDefaultOracleMaxTechnologies = 20;

// Exact Pareto front by enumerating every subset of technologies within
// cmax, in increasing bitmask order, through the archive insertion rules.
// nvmin is a construction heuristic and plays no role here.
//
// Throws OracleLimitError when the instance has more than `max_ns`
// technologies.
ParetoArchive ExactFront(const Instance& instance,
                         int max_ns = kDefaultOracleMaxTechnologies);

}  // namespace secalloc

#endif  // SECALLOC_ORACLE_H_
