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

// Implication audits.
//
// A rule "premise@alpha => conclusion@g(alpha, n)" is checked on every
// allocation of every instance in a space: whenever the premise ratio is at
// least alpha, the conclusion ratio must be at least the guarantee.
//
// Spaces:
//   exhaustive  all instances with n and m in range and integer values in
//               range, up to relabeling goods and permuting agents
//   random      `trials` seeded instances per rule, n drawn among the
//               applicable values in range
//   instances   an explicit list
//
// Reports are deterministic: workers process contiguous chunks of instances
// and results merge in instance order.

#ifndef FAIRDIV_AUDIT_HPP_
#define FAIRDIV_AUDIT_HPP_

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fairdiv/instance.hpp"
#include "fairdiv/json_io.hpp"
#include "fairdiv/measures.hpp"
#include "fairdiv/oracle.hpp"

namespace fairdiv {

struct ImplicationRule {
  std::string id;
  std::string statement;
  std::string applicability;  // e.g. "n in {2, 3}"
  Notion premise = Notion::efx;
  Notion conclusion = Notion::ef1;
  /// Set when the rule only speaks about one premise level.
  std::optional<Rational> fixed_alpha;
  std::function<Rational(const Rational& alpha, std::size_t n)> guarantee;
  std::function<bool(std::size_t n)> applies;
};

/// prop1 .. prop12 in catalog order.
[[nodiscard]] const std::vector<ImplicationRule>& rule_catalog();
[[nodiscard]] const ImplicationRule* find_rule(std::string_view id);

enum class SpaceKind : std::uint8_t { exhaustive, random, instances };

struct AuditSpace {
  SpaceKind kind = SpaceKind::random;
  std::size_t n_min = 2;
  std::size_t n_max = 4;
  std::size_t m_min = 0;
  std::size_t m_max = 7;
  std::int64_t value_min = 0;
  std::int64_t value_max = 9;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  std::vector<Instance> instances;
  std::vector<Rational> alphas = {Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)};
  /// 0 selects std::thread::hardware_concurrency().
  std::size_t threads = 0;
  OracleBudget budget = OracleBudget::from_env();
  EvalOptions eval;

  [[nodiscard]] static AuditSpace exhaustive_default();
  [[nodiscard]] static AuditSpace random_default();
};

struct AuditCase {
  Instance instance;
  Allocation allocation;
  Rational alpha;
  Ratio premise;
  Ratio conclusion;
  Rational guarantee;
};

struct AlphaSummary {
  Rational alpha;
  std::uint64_t premise_satisfied = 0;
  std::uint64_t violations = 0;
  /// Allocation with the smallest conclusion ratio among those meeting the
  /// premise; earliest on ties.
  std::optional<AuditCase> tight_witness;
};

struct AuditReport {
  std::string rule_id;
  SpaceKind kind = SpaceKind::random;
  std::uint64_t seed = 0;
  std::uint64_t instances_checked = 0;
  std::uint64_t allocations_checked = 0;
  std::uint64_t violation_count = 0;
  /// The first violations found, at most kViolationSamples of them.
  std::vector<AuditCase> violations;
  std::vector<AlphaSummary> alphas;
  /// The per-alpha witness whose conclusion exceeds its guarantee by the least.
  std::optional<AuditCase> tight_witness;
  std::chrono::duration<double> elapsed{0};

  static constexpr std::size_t kViolationSamples = 50;
  [[nodiscard]] bool passed() const noexcept { return violation_count == 0; }
};

/// Applicable n within [space.n_min, space.n_max].
[[nodiscard]] std::vector<std::size_t> applicable_agents(const ImplicationRule& rule, const AuditSpace& space);

/// Audits each rule; throws rule_inapplicable if a rule applies to no n in
/// the space, budget_exceeded if an instance has too many allocations.
[[nodiscard]] std::vector<AuditReport> run_audit(const std::vector<const ImplicationRule*>& rules,
                                                 const AuditSpace& space);
[[nodiscard]] AuditReport audit_implication(const ImplicationRule& rule, const AuditSpace& space);

/// Canonical exhaustive instances with exactly n agents and m goods.
[[nodiscard]] std::vector<Instance> exhaustive_instances(std::size_t n, std::size_t m, std::int64_t value_min,
                                                         std::int64_t value_max);

[[nodiscard]] std::string_view to_string(SpaceKind kind);
[[nodiscard]] Json to_json(const AuditCase& c);
/// `elapsed` is written only when `include_timing` is set, so reports are
/// byte-identical across runs otherwise.
[[nodiscard]] Json to_json(const AuditReport& report, bool include_timing = false);

}  // namespace fairdiv

#endif  // FAIRDIV_AUDIT_HPP_
