// Copyright 2026 The fairdiv Authors.
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

// Brute-force ground truth over all n^m allocations of small instances.
//
// Allocations are enumerated as owner vectors in lexicographic order, the
// owner of good 0 being the most significant digit. The first allocation gives
// every good to agent 0.

#ifndef FAIRDIV_ORACLE_HPP_
#define FAIRDIV_ORACLE_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "fairdiv/instance.hpp"
#include "fairdiv/measures.hpp"

namespace fairdiv {

struct OracleBudget {
  std::uint64_t max_allocations = 10'000'000;
  /// Default budget, overridden by the FAIRDIV_BUDGET environment variable.
  static OracleBudget from_env();
};

/// n^m, saturating at UINT64_MAX.
[[nodiscard]] std::uint64_t allocation_count(std::size_t agents, std::size_t goods);

/// Throws budget_exceeded when n^m exceeds the budget.
void check_budget(const Instance& instance, const OracleBudget& budget);

/// Calls `visit(owners)` for every allocation in order until it returns false.
/// Returns the number of allocations visited.
std::uint64_t for_each_allocation(const Instance& instance, const OracleBudget& budget,
                                  const std::function<bool(std::span<const AgentIndex>)>& visit);

[[nodiscard]] std::vector<Allocation> enumerate_allocations(const Instance& instance,
                                                            const OracleBudget& budget = OracleBudget::from_env());

struct BestAlpha {
  Ratio ratio;
  Allocation allocation;
};

/// Maximum aggregate ratio of `notion` over all allocations; ties keep the
/// earliest allocation.
[[nodiscard]] BestAlpha best_alpha(const Instance& instance, Notion notion,
                                   const OracleBudget& budget = OracleBudget::from_env(),
                                   const EvalOptions& options = {});

/// First allocation whose aggregate ratio of `notion` is at least `alpha`.
[[nodiscard]] std::optional<Allocation> exact_fair_search(const Instance& instance, Notion notion,
                                                          const Rational& alpha,
                                                          const OracleBudget& budget = OracleBudget::from_env(),
                                                          const EvalOptions& options = {});

struct MonotonicityCheck {
  Bundle removed;       // S, inside one bundle of the defining partition
  Rational reduced;     // mu_i(n - 1, M \ S)
  bool holds = true;
};

struct MonotonicityReport {
  AgentIndex agent = 0;
  Rational share;                  // mu_i(n, M)
  std::vector<Bundle> partition;   // defining partition
  std::size_t checks = 0;
  bool passed = true;
  std::vector<MonotonicityCheck> counterexamples;
};

/// Checks mu_i(n - 1, M \ S) >= mu_i(n, M) for S = {}, every single good, and
/// `trials` random subsets S of random bundles of the defining partition.
/// Requires n >= 2.
[[nodiscard]] MonotonicityReport check_monotonicity(const Instance& instance, AgentIndex agent,
                                                    std::size_t trials, std::uint64_t seed,
                                                    const SolverLimits& limits = {});

}  // namespace fairdiv

#endif  // FAIRDIV_ORACLE_HPP_
