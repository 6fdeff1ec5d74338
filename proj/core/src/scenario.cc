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

#include "secalloc/scenario.h"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "json.hpp"
#include "secalloc/errors.h"
#include "secalloc/random.h"

namespace secalloc {

using Json = nlohmann::ordered_json;

void ScenarioConfig::Validate() const {
  if (initial_nv < 1 || initial_ns < 1) {
    throw InvalidParameterError("initial sizes must be positive");
  }
  if (periods < 0) throw InvalidParameterError("periods must be >= 0");
  if (vuln_growth < 1) {
    throw InvalidParameterError("vuln_growth must be >= 1");
  }
  if (tech_growth < 0) throw InvalidParameterError("tech_growth must be >= 0");
  if (!(coverage_density > 0.0 && coverage_density <= 1.0)) {
    throw InvalidParameterError("coverage_density must lie in (0, 1]");
  }
  if (cost.base < 0 || cost.noise < 0 || cost.slope <= cost.noise) {
    throw InvalidParameterError(
        "cost parameters need base >= 0 and 0 <= noise < slope");
  }
  if (cmax < 0) throw InvalidParameterError("cmax must be >= 0");
  if (nvmin < 0 || nvmin > initial_nv) {
    throw InvalidParameterError("nvmin must lie in [0, initial_nv]");
  }
  if (max_row_retries < 0) {
    throw InvalidParameterError("max_row_retries must be >= 0");
  }
}

std::vector<int> CoverageCounts(const Instance& instance) {
  std::vector<int> counts(instance.num_technologies());
  for (int j = 0; j < instance.num_technologies(); ++j) {
    counts[j] = static_cast<int>(instance.covered_by(j).size());
  }
  return counts;
}

namespace {

// Draws the row of vulnerability `row` over columns [0, cols), retrying an
// empty draw and then repairing or failing per config.
void DrawCoverageRow(BoolMatrix& matrix, int row, const ScenarioConfig& config,
                     Random& rng, int vuln_label) {
  const int cols = matrix.cols();
  for (int attempt = 0; attempt <= config.max_row_retries; ++attempt) {
    bool any = false;
    for (int j = 0; j < cols; ++j) {
      const bool hit = rng.Bernoulli(config.coverage_density);
      matrix.set(row, j, hit);
      any |= hit;
    }
    if (any) return;
  }
  if (!config.repair_uncovered || cols == 0) {
    throw InfeasibleError("vulnerability " + std::to_string(vuln_label) +
                          " could not be covered after " +
                          std::to_string(config.max_row_retries + 1) +
                          " draws");
  }
  matrix.set(row, static_cast<int>(rng.UniformIndex(cols)));
}

Cost FormulaCost(const CostParams& params, int count, Random& rng) {
  return params.base + params.slope * count +
         static_cast<Cost>(rng.UniformIndex(static_cast<size_t>(params.noise) +
                                            1));
}

// Adds coverage on the new rows to existing technologies so that, ordered
// by cost, coverage counts never decrease.
void RestoreCostMonotonicity(const std::vector<Cost>& old_costs,
                             std::vector<int> old_counts, BoolMatrix& new_rows,
                             Random& rng) {
  const int old_ns = static_cast<int>(old_costs.size());
  std::vector<int> counts = std::move(old_counts);
  for (int r = 0; r < new_rows.rows(); ++r) {
    for (int j = 0; j < old_ns; ++j) counts[j] += new_rows.at(r, j) ? 1 : 0;
  }
  std::vector<int> order(old_ns);
  for (int j = 0; j < old_ns; ++j) order[j] = j;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::pair(old_costs[a], a) < std::pair(old_costs[b], b);
  });

  int floor_below = 0;  // max count among strictly cheaper technologies
  size_t group_begin = 0;
  while (group_begin < order.size()) {
    size_t group_end = group_begin;
    while (group_end < order.size() &&
           old_costs[order[group_end]] == old_costs[order[group_begin]]) {
      ++group_end;
    }
    int group_max = 0;
    for (size_t k = group_begin; k < group_end; ++k) {
      const int j = order[k];
      if (counts[j] < floor_below) {
        std::vector<int> free_rows;
        for (int r = 0; r < new_rows.rows(); ++r) {
          if (!new_rows.at(r, j)) free_rows.push_back(r);
        }
        int deficit = floor_below - counts[j];
        // The deficit never exceeds the free rows while the invariant held
        // at the previous period.
        while (deficit-- > 0 && !free_rows.empty()) {
          const size_t pick = rng.UniformIndex(free_rows.size());
          new_rows.set(free_rows[pick], j);
          free_rows.erase(free_rows.begin() + static_cast<ptrdiff_t>(pick));
          ++counts[j];
        }
      }
      group_max = std::max(group_max, counts[j]);
    }
    floor_below = std::max(floor_below, group_max);
    group_begin = group_end;
  }
}

// Places `formula` inside the cost interval allowed by already-priced
// technologies with smaller and larger coverage counts.
Cost ClampToOrder(Cost formula, int count, const std::vector<Cost>& costs,
                  const std::vector<int>& counts) {
  Cost low = 0;
  Cost high = std::numeric_limits<Cost>::max();
  for (size_t k = 0; k < costs.size(); ++k) {
    if (counts[k] < count) low = std::max(low, costs[k]);
    if (counts[k] > count) high = std::min(high, costs[k]);
  }
  return std::clamp(formula, low, std::max(low, high));
}

PeriodDelta GenerateDelta(const Instance& previous,
                          const ScenarioConfig& config, Random& rng) {
  const int old_nv = previous.num_vulnerabilities();
  const int old_ns = previous.num_technologies();
  const int new_nv = config.vuln_growth;
  const int new_ns = config.tech_growth;
  const int total_ns = old_ns + new_ns;

  PeriodDelta delta;
  delta.new_vulnerabilities = new_nv;
  delta.new_technologies = new_ns;
  delta.existing_rows = BoolMatrix(old_nv, new_ns);
  for (int i = 0; i < old_nv; ++i) {
    for (int j = 0; j < new_ns; ++j) {
      delta.existing_rows.set(i, j, rng.Bernoulli(config.coverage_density));
    }
  }
  delta.new_rows = BoolMatrix(new_nv, total_ns);
  for (int r = 0; r < new_nv; ++r) {
    DrawCoverageRow(delta.new_rows, r, config, rng, old_nv + r);
  }
  RestoreCostMonotonicity(previous.costs(), CoverageCounts(previous),
                          delta.new_rows, rng);

  std::vector<Cost> priced_costs = previous.costs();
  std::vector<int> priced_counts = CoverageCounts(previous);
  for (int j = 0; j < old_ns; ++j) {
    for (int r = 0; r < new_nv; ++r) {
      priced_counts[j] += delta.new_rows.at(r, j) ? 1 : 0;
    }
  }
  for (int k = 0; k < new_ns; ++k) {
    int count = 0;
    for (int i = 0; i < old_nv; ++i) count += delta.existing_rows.at(i, k);
    for (int r = 0; r < new_nv; ++r) count += delta.new_rows.at(r, old_ns + k);
    const Cost cost = ClampToOrder(FormulaCost(config.cost, count, rng), count,
                                   priced_costs, priced_counts);
    delta.new_costs.push_back(cost);
    priced_costs.push_back(cost);
    priced_counts.push_back(count);
  }
  return delta;
}

}  // namespace

Scenario GenerateScenario(const ScenarioConfig& config) {
  config.Validate();
  Random rng(config.seed);

  BoolMatrix coverage(config.initial_nv, config.initial_ns);
  for (int i = 0; i < config.initial_nv; ++i) {
    DrawCoverageRow(coverage, i, config, rng, i);
  }
  std::vector<Cost> costs;
  for (int j = 0; j < config.initial_ns; ++j) {
    int count = 0;
    for (int i = 0; i < config.initial_nv; ++i) count += coverage.at(i, j);
    costs.push_back(FormulaCost(config.cost, count, rng));
  }

  Scenario scenario;
  scenario.seed = config.seed;
  scenario.initial =
      Instance(std::vector<uint8_t>(config.initial_nv, 1), std::move(coverage),
               std::move(costs), config.cmax, config.nvmin);
  Instance current = scenario.initial;
  for (int t = 1; t <= config.periods; ++t) {
    scenario.deltas.push_back(GenerateDelta(current, config, rng));
    current = ApplyDelta(current, scenario.deltas.back());
  }
  return scenario;
}

Instance ApplyDelta(const Instance& instance, const PeriodDelta& delta) {
  const int old_nv = instance.num_vulnerabilities();
  const int old_ns = instance.num_technologies();
  const int n_v = old_nv + delta.new_vulnerabilities;
  const int n_s = old_ns + delta.new_technologies;
  if (delta.existing_rows.rows() != old_nv ||
      delta.existing_rows.cols() != delta.new_technologies ||
      delta.new_rows.rows() != delta.new_vulnerabilities ||
      delta.new_rows.cols() != n_s ||
      static_cast<int>(delta.new_costs.size()) != delta.new_technologies) {
    throw InvalidInstanceError("period delta does not match a " +
                               std::to_string(old_nv) + "x" +
                               std::to_string(old_ns) + " instance");
  }
  BoolMatrix coverage(n_v, n_s);
  for (int i = 0; i < old_nv; ++i) {
    for (int j = 0; j < old_ns; ++j) coverage.set(i, j, instance.covers(j, i));
    for (int k = 0; k < delta.new_technologies; ++k) {
      coverage.set(i, old_ns + k, delta.existing_rows.at(i, k));
    }
  }
  for (int r = 0; r < delta.new_vulnerabilities; ++r) {
    for (int j = 0; j < n_s; ++j) {
      coverage.set(old_nv + r, j, delta.new_rows.at(r, j));
    }
  }
  std::vector<uint8_t> active = instance.active_flags();
  active.resize(n_v, 1);
  std::vector<Cost> costs = instance.costs();
  costs.insert(costs.end(), delta.new_costs.begin(), delta.new_costs.end());
  return Instance(std::move(active), std::move(coverage), std::move(costs),
                  instance.cmax(), instance.nvmin());
}

Instance InstanceAt(const Scenario& scenario, int t) {
  if (t < 0 || t > scenario.periods()) {
    throw InvalidParameterError("period " + std::to_string(t) +
                                " outside [0, " +
                                std::to_string(scenario.periods()) + "]");
  }
  Instance current = scenario.initial;
  for (int k = 0; k < t; ++k) current = ApplyDelta(current, scenario.deltas[k]);
  return current;
}

// ---------------------------------------------------------------------------
// Serialization.

namespace {

std::string RowString(const BoolMatrix& matrix, int row) {
  std::string out(matrix.cols(), '0');
  for (int j = 0; j < matrix.cols(); ++j) {
    if (matrix.at(row, j)) out[j] = '1';
  }
  return out;
}

Json MatrixToJson(const BoolMatrix& matrix) {
  Json rows = Json::array();
  for (int i = 0; i < matrix.rows(); ++i) rows.push_back(RowString(matrix, i));
  return rows;
}

std::string Where(int period, const std::string& field) {
  return period == 0 ? "initial." + field
                     : "deltas[" + std::to_string(period - 1) + "]." + field +
                           " (period " + std::to_string(period) + ")";
}

const Json& Require(const Json& object, const char* key, int period,
                    const std::string& prefix = "") {
  if (!object.is_object() || !object.contains(key)) {
    throw ParseError("missing field " + Where(period, prefix + key));
  }
  return object.at(key);
}

int64_t RequireInteger(const Json& object, const char* key, int period,
                       const std::string& prefix = "") {
  const Json& value = Require(object, key, period, prefix);
  if (!value.is_number_integer()) {
    throw ParseError("field " + Where(period, prefix + key) +
                     " must be an integer");
  }
  return value.get<int64_t>();
}

std::string BitString(const Json& value, const std::string& field, int period,
                      size_t expected_length) {
  if (!value.is_string()) {
    throw ParseError("field " + Where(period, field) + " must be a string");
  }
  const std::string bits = value.get<std::string>();
  if (bits.size() != expected_length) {
    throw ParseError("dimension mismatch in " + Where(period, field) + ": " +
                     std::to_string(bits.size()) + " entries, expected " +
                     std::to_string(expected_length));
  }
  if (bits.find_first_not_of("01") != std::string::npos) {
    throw ParseError("field " + Where(period, field) +
                     " may only contain '0' and '1'");
  }
  return bits;
}

BoolMatrix MatrixFromJson(const Json& value, const std::string& field,
                          int period, int rows, int cols) {
  if (!value.is_array()) {
    throw ParseError("field " + Where(period, field) + " must be an array");
  }
  if (static_cast<int>(value.size()) != rows) {
    throw ParseError("dimension mismatch in " + Where(period, field) + ": " +
                     std::to_string(value.size()) + " rows, expected " +
                     std::to_string(rows));
  }
  BoolMatrix matrix(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const std::string bits =
        BitString(value[i], field + "[" + std::to_string(i) + "]", period,
                  static_cast<size_t>(cols));
    for (int j = 0; j < cols; ++j) matrix.set(i, j, bits[j] == '1');
  }
  return matrix;
}

std::vector<Cost> CostsFromJson(const Json& value, const std::string& field,
                                int period, int expected) {
  if (!value.is_array() || static_cast<int>(value.size()) != expected) {
    throw ParseError("dimension mismatch in " + Where(period, field) +
                     ": expected an array of " + std::to_string(expected) +
                     " costs");
  }
  std::vector<Cost> costs;
  for (const Json& entry : value) {
    if (!entry.is_number_integer() || entry.get<int64_t>() < 0) {
      throw ParseError("field " + Where(period, field) +
                       " must hold non-negative integers");
    }
    costs.push_back(entry.get<int64_t>());
  }
  return costs;
}

}  // namespace

void SaveScenario(const Scenario& scenario, std::ostream& out) {
  const Instance& initial = scenario.initial;
  Json doc;
  doc["seed"] = scenario.seed;
  doc["cmax"] = initial.cmax();
  doc["nvmin"] = initial.nvmin();

  std::string active(initial.num_vulnerabilities(), '0');
  for (int i = 0; i < initial.num_vulnerabilities(); ++i) {
    if (initial.active(i)) active[i] = '1';
  }
  Json init;
  init["n_v"] = initial.num_vulnerabilities();
  init["n_s"] = initial.num_technologies();
  init["active"] = active;
  init["coverage"] = MatrixToJson(initial.coverage());
  init["cost"] = initial.costs();
  doc["initial"] = std::move(init);

  Json deltas = Json::array();
  for (const PeriodDelta& delta : scenario.deltas) {
    Json entry;
    entry["new_vulnerabilities"] = delta.new_vulnerabilities;
    entry["new_technologies"] = delta.new_technologies;
    entry["coverage_extension"] = {
        {"existing_rows", MatrixToJson(delta.existing_rows)},
        {"new_rows", MatrixToJson(delta.new_rows)}};
    entry["new_costs"] = delta.new_costs;
    deltas.push_back(std::move(entry));
  }
  doc["deltas"] = std::move(deltas);
  out << doc.dump(2) << '\n';
}

std::string SaveScenarioToString(const Scenario& scenario) {
  std::ostringstream out;
  SaveScenario(scenario, out);
  return out.str();
}

Scenario LoadScenario(std::istream& in, std::vector<std::string>* warnings) {
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("scenario is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("scenario must be a JSON object");

  Scenario scenario;
  for (const char* key : {"seed", "cmax", "nvmin", "initial", "deltas"}) {
    if (!doc.contains(key)) {
      throw ParseError(std::string("missing top-level field ") + key);
    }
  }
  if (!doc["seed"].is_number_unsigned() && !doc["seed"].is_number_integer()) {
    throw ParseError("field seed must be an integer");
  }
  scenario.seed = doc["seed"].get<uint64_t>();
  if (!doc["cmax"].is_number_integer() || !doc["nvmin"].is_number_integer()) {
    throw ParseError("fields cmax and nvmin must be integers");
  }
  const Cost cmax = doc["cmax"].get<int64_t>();
  const int64_t nvmin = doc["nvmin"].get<int64_t>();

  const Json& init = doc["initial"];
  const int64_t n_v = RequireInteger(init, "n_v", 0);
  const int64_t n_s = RequireInteger(init, "n_s", 0);
  if (n_v < 0 || n_s < 0) throw ParseError("initial dimensions are negative");
  const std::string active_bits =
      BitString(Require(init, "active", 0), "active", 0, n_v);
  std::vector<uint8_t> active(n_v);
  for (int64_t i = 0; i < n_v; ++i) active[i] = active_bits[i] == '1';
  BoolMatrix coverage = MatrixFromJson(Require(init, "coverage", 0), "coverage",
                                       0, static_cast<int>(n_v),
                                       static_cast<int>(n_s));
  std::vector<Cost> costs =
      CostsFromJson(Require(init, "cost", 0), "cost", 0, static_cast<int>(n_s));
  try {
    scenario.initial =
        Instance(std::move(active), std::move(coverage), std::move(costs),
                 cmax, static_cast<int>(nvmin));
  } catch (const InvalidInstanceError& e) {
    throw ParseError(std::string("invalid initial instance: ") + e.what());
  }

  const Json& deltas = doc["deltas"];
  if (!deltas.is_array()) throw ParseError("field deltas must be an array");
  int cur_nv = static_cast<int>(n_v);
  int cur_ns = static_cast<int>(n_s);
  for (size_t k = 0; k < deltas.size(); ++k) {
    const int period = static_cast<int>(k) + 1;
    const Json& entry = deltas[k];
    PeriodDelta delta;
    const int64_t dv = RequireInteger(entry, "new_vulnerabilities", period);
    const int64_t ds = RequireInteger(entry, "new_technologies", period);
    if (dv < 0 || ds < 0) {
      throw ParseError("negative growth in " + Where(period, "new_*"));
    }
    delta.new_vulnerabilities = static_cast<int>(dv);
    delta.new_technologies = static_cast<int>(ds);
    const Json& extension = Require(entry, "coverage_extension", period);
    delta.existing_rows = MatrixFromJson(
        Require(extension, "existing_rows", period, "coverage_extension."),
        "coverage_extension.existing_rows", period, cur_nv,
        delta.new_technologies);
    delta.new_rows = MatrixFromJson(
        Require(extension, "new_rows", period, "coverage_extension."),
        "coverage_extension.new_rows", period, delta.new_vulnerabilities,
        cur_ns + delta.new_technologies);
    delta.new_costs = CostsFromJson(Require(entry, "new_costs", period),
                                    "new_costs", period,
                                    delta.new_technologies);
    cur_nv += delta.new_vulnerabilities;
    cur_ns += delta.new_technologies;
    scenario.deltas.push_back(std::move(delta));
  }

  if (warnings != nullptr) {
    Instance current = scenario.initial;
    int first_new = 0;
    for (int t = 0; t <= scenario.periods(); ++t) {
      if (t > 0) current = ApplyDelta(current, scenario.deltas[t - 1]);
      for (int i = first_new; i < current.num_vulnerabilities(); ++i) {
        if (current.active(i) && current.covering(i).empty()) {
          warnings->push_back("infeasible: vulnerability " +
                              std::to_string(i) + " (period " +
                              std::to_string(t) +
                              ") has no covering technology");
        }
      }
      first_new = current.num_vulnerabilities();
    }
  }
  return scenario;
}

}  // namespace secalloc
