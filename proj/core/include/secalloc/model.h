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

#ifndef SECALLOC_MODEL_H_
#define SECALLOC_MODEL_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace secalloc {

using VulnIndex = int32_t;
using TechIndex = int32_t;
using Cost = int64_t;

// Dense row-major 0/1 matrix. Rows are vulnerabilities, columns technologies.
class BoolMatrix {
 public:
  BoolMatrix() = default;
  BoolMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool at(int row, int col) const {
    return data_[static_cast<size_t>(row) * cols_ + col] != 0;
  }
  void set(int row, int col, bool value = true) {
    data_[static_cast<size_t>(row) * cols_ + col] = value ? 1 : 0;
  }

  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<uint8_t> data_;
};

// The organization's system at one period: which vulnerabilities are present,
// which technologies may be deployed, what each one covers and costs, and the
// budget / residual bounds used by the construction heuristics.
//
// Immutable after construction; safe to share across concurrent solver runs.
class Instance {
 public:
  Instance() = default;

  // Throws InvalidInstanceError if `coverage` is not active.size() x
  // cost.size(), a cost or cmax is negative, or nvmin is outside [0, n_v].
  Instance(std::vector<uint8_t> active, BoolMatrix coverage,
           std::vector<Cost> cost, Cost cmax, int nvmin);

  int num_vulnerabilities() const { return static_cast<int>(active_.size()); }
  int num_technologies() const { return static_cast<int>(cost_.size()); }

  bool active(VulnIndex i) const { return active_[i] != 0; }
  bool covers(TechIndex j, VulnIndex i) const { return coverage_.at(i, j); }
  Cost cost(TechIndex j) const { return cost_[j]; }
  Cost cmax() const { return cmax_; }
  int nvmin() const { return nvmin_; }
  int active_count() const { return active_count_; }

  const std::vector<uint8_t>& active_flags() const { return active_; }
  const BoolMatrix& coverage() const { return coverage_; }
  const std::vector<Cost>& costs() const { return cost_; }

  // Vulnerabilities (active or not) that technology j covers.
  std::span<const VulnIndex> covered_by(TechIndex j) const {
    return covered_by_[j];
  }
  // Technologies that cover vulnerability i.
  std::span<const TechIndex> covering(VulnIndex i) const {
    return covering_[i];
  }

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.active_ == b.active_ && a.coverage_ == b.coverage_ &&
           a.cost_ == b.cost_ && a.cmax_ == b.cmax_ && a.nvmin_ == b.nvmin_;
  }

 private:
  std::vector<uint8_t> active_;
  BoolMatrix coverage_;
  std::vector<Cost> cost_;
  Cost cmax_ = 0;
  int nvmin_ = 0;
  int active_count_ = 0;
  std::vector<std::vector<VulnIndex>> covered_by_;
  std::vector<std::vector<TechIndex>> covering_;
};

// Both components are minimized.
struct Objective {
  int residual_count = 0;
  Cost total_cost = 0;

  friend auto operator<=>(const Objective&, const Objective&) = default;
};

// Weak Pareto dominance: a is no worse in both components and strictly better
// in at least one.
constexpr bool Dominates(const Objective& a, const Objective& b) {
  return a.residual_count <= b.residual_count && a.total_cost <= b.total_cost &&
         (a.residual_count < b.residual_count || a.total_cost < b.total_cost);
}

// r_i = 1 iff vulnerability i is active and no selected technology covers it.
// Throws InvalidSelectionError on out-of-range or repeated indices.
std::vector<uint8_t> ComputeResiduals(const Instance& instance,
                                      std::span<const TechIndex> selection);

Objective Evaluate(const Instance& instance,
                   std::span<const TechIndex> selection);

// An ordered set of technologies (construction order preserved) together with
// its residual vector and cached objective. Every mutation keeps the cache in
// sync with the selection.
class Plan {
 public:
  Plan() = default;

  // The empty plan for `instance`.
  explicit Plan(const Instance& instance);

  // Validates and evaluates `selection`. Throws InvalidSelectionError.
  Plan(const Instance& instance, std::vector<TechIndex> selection);

  std::span<const TechIndex> selection() const { return selection_; }
  const std::vector<uint8_t>& residuals() const { return residuals_; }
  const Objective& objective() const { return objective_; }
  int residual_count() const { return objective_.residual_count; }
  Cost total_cost() const { return objective_.total_cost; }
  size_t size() const { return selection_.size(); }
  bool empty() const { return selection_.empty(); }

  bool contains(TechIndex j) const {
    return j >= 0 && static_cast<size_t>(j) < selected_.size() &&
           selected_[j] != 0;
  }
  bool is_residual(VulnIndex i) const { return residuals_[i] != 0; }

  // True if technology j covers at least one current residual vulnerability.
  bool CoversResidual(const Instance& instance, TechIndex j) const;

  // Appends j and returns the vulnerabilities that left the residual set.
  // Throws InvalidSelectionError if j is out of range or already selected.
  std::vector<VulnIndex> Add(const Instance& instance, TechIndex j);

  // Removes the technology at `position` in construction order.
  void RemoveAt(const Instance& instance, size_t position);

  // Residual vulnerabilities in increasing index order.
  std::vector<VulnIndex> ResidualList() const;

  // The selection as a sorted set, for identity comparisons.
  std::vector<TechIndex> SortedSelection() const;
  bool SameSetAs(const Plan& other) const;

 private:
  void Recompute(const Instance& instance);

  std::vector<TechIndex> selection_;
  std::vector<uint8_t> selected_;
  std::vector<uint8_t> residuals_;
  Objective objective_;
};

enum class InsertResult {
  kAccepted,
  kRejectedDominated,
  kRejectedDuplicate,
  // Capacity reached and the candidate would evict nobody.
  kRejectedFull,
};

const char* ToString(InsertResult result);

// Mutually non-dominated set of plans with distinct selection sets. Plans with
// equal objective vectors but different technology sets may coexist.
//
// Serves as the harmony memory and as the GA population.
class ParetoArchive {
 public:
  ParetoArchive() = default;
  explicit ParetoArchive(std::optional<size_t> capacity)
      : capacity_(capacity) {}

  // Rejects the candidate if a member dominates it, a member has the same
  // selection set, or the archive is full and the candidate dominates no
  // member. Otherwise inserts it and erases every member it dominates.
  InsertResult Insert(Plan candidate);

  std::span<const Plan> members() const { return members_; }
  const Plan& operator[](size_t i) const { return members_[i]; }
  size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  std::optional<size_t> capacity() const { return capacity_; }

  std::vector<Objective> Objectives() const;

  // Exhaustive pairwise scan of both archive invariants.
  bool CheckInvariants() const;

 private:
  std::optional<size_t> capacity_;
  std::vector<Plan> members_;
};

}  // namespace secalloc

#endif  // SECALLOC_MODEL_H_
