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

#include "secalloc/model.h"

#include <algorithm>
#include <string>
#include <utility>

#include "secalloc/errors.h"

namespace secalloc {

BoolMatrix::BoolMatrix(int rows, int cols)
    : rows_(rows),
      cols_(cols),
      data_(static_cast<size_t>(rows) * static_cast<size_t>(cols), 0) {}

Instance::Instance(std::vector<uint8_t> active, BoolMatrix coverage,
                   std::vector<Cost> cost, Cost cmax, int nvmin)
    : active_(std::move(active)),
      coverage_(std::move(coverage)),
      cost_(std::move(cost)),
      cmax_(cmax),
      nvmin_(nvmin) {
  const int n_v = num_vulnerabilities();
  const int n_s = num_technologies();
  if (coverage_.rows() != n_v || coverage_.cols() != n_s) {
    throw InvalidInstanceError(
        "coverage matrix is " + std::to_string(coverage_.rows()) + "x" +
        std::to_string(coverage_.cols()) + ", expected " +
        std::to_string(n_v) + "x" + std::to_string(n_s));
  }
  for (int j = 0; j < n_s; ++j) {
    if (cost_[j] < 0) {
      throw InvalidInstanceError("negative cost for technology " +
                                 std::to_string(j));
    }
  }
  if (cmax_ < 0) throw InvalidInstanceError("negative cmax");
  if (nvmin_ < 0 || nvmin_ > n_v) {
    throw InvalidInstanceError("nvmin " + std::to_string(nvmin_) +
                               " outside [0, " + std::to_string(n_v) + "]");
  }
  for (auto& flag : active_) flag = flag != 0 ? 1 : 0;
  active_count_ =
      static_cast<int>(std::count(active_.begin(), active_.end(), 1));

  covered_by_.assign(n_s, {});
  covering_.assign(n_v, {});
  for (int i = 0; i < n_v; ++i) {
    for (int j = 0; j < n_s; ++j) {
      if (coverage_.at(i, j)) {
        covered_by_[j].push_back(i);
        covering_[i].push_back(j);
      }
    }
  }
}

namespace {

void ValidateSelection(const Instance& instance,
                       std::span<const TechIndex> selection,
                       std::vector<uint8_t>& selected) {
  const int n_s = instance.num_technologies();
  selected.assign(n_s, 0);
  for (const TechIndex j : selection) {
    if (j < 0 || j >= n_s) {
      throw InvalidSelectionError("technology index " + std::to_string(j) +
                                  " out of range [0, " + std::to_string(n_s) +
                                  ")");
    }
    if (selected[j] != 0) {
      throw InvalidSelectionError("technology " + std::to_string(j) +
                                  " selected twice");
    }
    selected[j] = 1;
  }
}

}  // namespace

std::vector<uint8_t> ComputeResiduals(const Instance& instance,
                                      std::span<const TechIndex> selection) {
  std::vector<uint8_t> selected;
  ValidateSelection(instance, selection, selected);
  std::vector<uint8_t> residuals(instance.active_flags());
  for (const TechIndex j : selection) {
    for (const VulnIndex i : instance.covered_by(j)) residuals[i] = 0;
  }
  return residuals;
}

Objective Evaluate(const Instance& instance,
                   std::span<const TechIndex> selection) {
  const std::vector<uint8_t> residuals = ComputeResiduals(instance, selection);
  Objective objective;
  objective.residual_count =
      static_cast<int>(std::count(residuals.begin(), residuals.end(), 1));
  for (const TechIndex j : selection) objective.total_cost += instance.cost(j);
  return objective;
}

Plan::Plan(const Instance& instance)
    : selected_(instance.num_technologies(), 0),
      residuals_(instance.active_flags()) {
  objective_.residual_count = instance.active_count();
}

Plan::Plan(const Instance& instance, std::vector<TechIndex> selection)
    : selection_(std::move(selection)) {
  ValidateSelection(instance, selection_, selected_);
  Recompute(instance);
}

void Plan::Recompute(const Instance& instance) {
  residuals_ = instance.active_flags();
  objective_ = Objective{};
  for (const TechIndex j : selection_) {
    for (const VulnIndex i : instance.covered_by(j)) residuals_[i] = 0;
    objective_.total_cost += instance.cost(j);
  }
  objective_.residual_count =
      static_cast<int>(std::count(residuals_.begin(), residuals_.end(), 1));
}

bool Plan::CoversResidual(const Instance& instance, TechIndex j) const {
  for (const VulnIndex i : instance.covered_by(j)) {
    if (residuals_[i] != 0) return true;
  }
  return false;
}

std::vector<VulnIndex> Plan::Add(const Instance& instance, TechIndex j) {
  if (j < 0 || j >= instance.num_technologies()) {
    throw InvalidSelectionError("technology index " + std::to_string(j) +
                                " out of range");
  }
  if (selected_[j] != 0) {
    throw InvalidSelectionError("technology " + std::to_string(j) +
                                " already selected");
  }
  std::vector<VulnIndex> newly_covered;
  for (const VulnIndex i : instance.covered_by(j)) {
    if (residuals_[i] != 0) {
      residuals_[i] = 0;
      newly_covered.push_back(i);
    }
  }
  selection_.push_back(j);
  selected_[j] = 1;
  objective_.residual_count -= static_cast<int>(newly_covered.size());
  objective_.total_cost += instance.cost(j);
  return newly_covered;
}

void Plan::RemoveAt(const Instance& instance, size_t position) {
  selected_[selection_[position]] = 0;
  selection_.erase(selection_.begin() + static_cast<ptrdiff_t>(position));
  Recompute(instance);
}

std::vector<VulnIndex> Plan::ResidualList() const {
  std::vector<VulnIndex> out;
  out.reserve(objective_.residual_count);
  for (size_t i = 0; i < residuals_.size(); ++i) {
    if (residuals_[i] != 0) out.push_back(static_cast<VulnIndex>(i));
  }
  return out;
}

std::vector<TechIndex> Plan::SortedSelection() const {
  std::vector<TechIndex> sorted(selection_);
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

bool Plan::SameSetAs(const Plan& other) const {
  if (selection_.size() != other.selection_.size()) return false;
  return std::all_of(selection_.begin(), selection_.end(),
                     [&](TechIndex j) { return other.contains(j); });
}

const char* ToString(InsertResult result) {
  switch (result) {
    case InsertResult::kAccepted:
      return "accepted";
    case InsertResult::kRejectedDominated:
      return "rejected-dominated";
    case InsertResult::kRejectedDuplicate:
      return "rejected-duplicate";
    case InsertResult::kRejectedFull:
      return "rejected-full";
  }
  return "unknown";
}

InsertResult ParetoArchive::Insert(Plan candidate) {
  const Objective& objective = candidate.objective();
  bool evicts_any = false;
  for (const Plan& member : members_) {
    if (Dominates(member.objective(), objective)) {
      return InsertResult::kRejectedDominated;
    }
    // Identical sets always have identical objectives on one instance.
    if (member.objective() == objective && member.SameSetAs(candidate)) {
      return InsertResult::kRejectedDuplicate;
    }
    if (Dominates(objective, member.objective())) evicts_any = true;
  }
  if (!evicts_any && capacity_.has_value() && members_.size() >= *capacity_) {
    return InsertResult::kRejectedFull;
  }
  std::erase_if(members_, [&](const Plan& member) {
    return Dominates(objective, member.objective());
  });
  members_.push_back(std::move(candidate));
  return InsertResult::kAccepted;
}

std::vector<Objective> ParetoArchive::Objectives() const {
  std::vector<Objective> out;
  out.reserve(members_.size());
  for (const Plan& member : members_) out.push_back(member.objective());
  return out;
}

bool ParetoArchive::CheckInvariants() const {
  for (size_t a = 0; a < members_.size(); ++a) {
    for (size_t b = 0; b < members_.size(); ++b) {
      if (a == b) continue;
      if (Dominates(members_[a].objective(), members_[b].objective())) {
        return false;
      }
      if (members_[a].SameSetAs(members_[b])) return false;
    }
  }
  return true;
}

}  // namespace secalloc
