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

#include "secalloc/coverage_ledger.h"

namespace secalloc {

void CoverageLedger::Record(TechIndex j,
                            std::span<const VulnIndex> newly_covered) {
  for (const VulnIndex i : newly_covered) effective_.set(i, j);
}

void CoverageLedger::RecordPlan(const Instance& instance,
                                std::span<const TechIndex> selection) {
  Plan replay(instance);
  for (const TechIndex j : selection) Record(j, replay.Add(instance, j));
}

bool CoverageLedger::IsContainedIn(const Instance& instance) const {
  if (effective_.rows() != instance.num_vulnerabilities() ||
      effective_.cols() != instance.num_technologies()) {
    return false;
  }
  for (int i = 0; i < effective_.rows(); ++i) {
    for (int j = 0; j < effective_.cols(); ++j) {
      if (effective_.at(i, j) && !instance.covers(j, i)) return false;
    }
  }
  return true;
}

}  // namespace secalloc
