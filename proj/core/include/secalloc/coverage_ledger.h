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

#ifndef SECALLOC_COVERAGE_LEDGER_H_
#define SECALLOC_COVERAGE_LEDGER_H_

#include <span>

#include "secalloc/model.h"

namespace secalloc {

// Records, for every technology picked during a recorded construction, the
// vulnerabilities it newly covered at the moment it was added. Always a
// sub-matrix of the instance's coverage matrix.
class CoverageLedger {
 public:
  CoverageLedger() = default;
  explicit CoverageLedger(const Instance& instance)
      : effective_(instance.num_vulnerabilities(),
                   instance.num_technologies()) {}

  bool effective(VulnIndex i, TechIndex j) const {
    return effective_.at(i, j);
  }

  void Record(TechIndex j, std::span<const VulnIndex> newly_covered);

  // Replays `selection` in order from the empty plan and records each step.
  void RecordPlan(const Instance& instance,
                  std::span<const TechIndex> selection);

  // effective[i,j] = 1 implies coverage[i,j] = 1.
  bool IsContainedIn(const Instance& instance) const;

  const BoolMatrix& matrix() const { return effective_; }

 private:
  BoolMatrix effective_;
};

}  // namespace secalloc

#endif  // SECALLOC_COVERAGE_LEDGER_H_
