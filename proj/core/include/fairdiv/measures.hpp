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

// Fairness ratios of an allocation.
//
// Every notion is reported as the largest alpha for which the allocation is
// alpha-fair, Unbounded when the constraint is vacuous. Ratios are raw and may
// exceed 1. Aggregates are minima over ordered pairs (EF, EF1, EFX, PMMS) or
// agents (MMS).

#ifndef FAIRDIV_MEASURES_HPP_
#define FAIRDIV_MEASURES_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fairdiv/instance.hpp"
#include "fairdiv/maximin.hpp"
#include "fairdiv/ratio.hpp"

namespace fairdiv {

enum class Notion : std::uint8_t { ef, ef1, efx, mms, pmms };

inline constexpr std::size_t kNotionCount = 5;
inline constexpr std::array<Notion, kNotionCount> kAllNotions = {Notion::ef, Notion::ef1, Notion::efx,
                                                                 Notion::mms, Notion::pmms};

/// "ef", "ef1", "efx", "mms", "pmms".
[[nodiscard]] std::string_view to_string(Notion notion);
/// Case-insensitive inverse of to_string.
[[nodiscard]] std::optional<Notion> parse_notion(std::string_view text);

using NotionMask = std::uint8_t;
[[nodiscard]] constexpr NotionMask mask_of(Notion notion) {
  return static_cast<NotionMask>(1U << static_cast<unsigned>(notion));
}
inline constexpr NotionMask kAllNotionsMask = 0x1F;

struct EvalOptions {
  /// EFX also removes zero-valued goods (the variant without the positivity
  /// requirement).
  bool strict_efx = false;
  SolverLimits limits;
};

[[nodiscard]] Ratio ef_ratio_pair(const Instance& instance, AgentIndex i, AgentIndex j,
                                  const Allocation& allocation);
[[nodiscard]] Ratio ef1_ratio_pair(const Instance& instance, AgentIndex i, AgentIndex j,
                                   const Allocation& allocation);
[[nodiscard]] Ratio efx_ratio_pair(const Instance& instance, AgentIndex i, AgentIndex j,
                                   const Allocation& allocation, const EvalOptions& options = {});
[[nodiscard]] Ratio pmms_ratio_pair(const Instance& instance, AgentIndex i, AgentIndex j,
                                    const Allocation& allocation, const EvalOptions& options = {});
[[nodiscard]] Ratio mms_ratio_agent(const Instance& instance, AgentIndex i, const Allocation& allocation,
                                    const EvalOptions& options = {});

struct PairRatios {
  AgentIndex i = 0;
  AgentIndex j = 0;
  Ratio ef;
  Ratio ef1;
  Ratio efx;
  Ratio pmms;
};

struct FairnessReport {
  /// Ordered pairs (i, j), i != j, in lexicographic order.
  std::vector<PairRatios> pairs;
  std::vector<Rational> own_value;       // v_i(A_i)
  std::vector<Rational> maximin_share;   // mu_i(n, M)
  std::vector<Ratio> mms_agent;
  Ratio ef;
  Ratio ef1;
  Ratio efx;
  Ratio mms;
  Ratio pmms;

  [[nodiscard]] const Ratio& aggregate(Notion notion) const;
};

/// Aggregate ratios indexed by Notion; entries outside the requested mask are
/// left Unbounded.
struct NotionRatios {
  std::array<Ratio, kNotionCount> values;
  [[nodiscard]] const Ratio& operator[](Notion notion) const { return values[static_cast<std::size_t>(notion)]; }
  [[nodiscard]] Ratio& operator[](Notion notion) { return values[static_cast<std::size_t>(notion)]; }
};

/// Evaluates many allocations of one instance, caching maximin shares and
/// pairwise bases. Not thread-safe; use one Evaluator per worker.
class Evaluator {
 public:
  explicit Evaluator(const Instance& instance, EvalOptions options = {});

  [[nodiscard]] const Instance& instance() const noexcept { return *instance_; }
  [[nodiscard]] const EvalOptions& options() const noexcept { return options_; }

  /// mu_i(n, M).
  [[nodiscard]] const Rational& maximin_share(AgentIndex agent);
  /// mu_i(2, S) for S given as sorted good indices.
  [[nodiscard]] Rational pairwise_base(AgentIndex agent, std::span<const GoodIndex> goods);

  [[nodiscard]] FairnessReport report(const Allocation& allocation);

  /// Aggregates of the requested notions for the allocation giving good g to
  /// owners[g].
  [[nodiscard]] NotionRatios aggregates(std::span<const AgentIndex> owners, NotionMask notions);

  /// Incremental form of aggregates(): load() an allocation once, then query
  /// notions one at a time.
  void load(std::span<const AgentIndex> owners) { collect(owners); }
  [[nodiscard]] Ratio aggregate(Notion notion);

 private:
  struct PairParts {
    Rational other;          // v_i(A_j)
    Rational max_item;       // max v_i(g) over A_j
    Rational min_positive;   // min positive v_i(g) over A_j, 0 if none
    Rational min_item;       // min v_i(g) over A_j
    bool empty = true;
    bool any_positive = false;
  };

  void collect(std::span<const AgentIndex> owners);
  [[nodiscard]] Ratio pair_ef(AgentIndex i, AgentIndex j) const;
  [[nodiscard]] Ratio pair_ef1(AgentIndex i, AgentIndex j) const;
  [[nodiscard]] Ratio pair_efx(AgentIndex i, AgentIndex j) const;
  [[nodiscard]] Ratio pair_pmms(AgentIndex i, AgentIndex j);
  [[nodiscard]] Ratio agent_mms(AgentIndex i);
  [[nodiscard]] Rational base_for_mask(AgentIndex agent, std::uint64_t mask);

  const Instance* instance_;
  EvalOptions options_;
  std::size_t n_;
  std::size_t m_;
  std::vector<std::optional<Rational>> mu_;
  // pmms bases keyed by (agent, union mask): dense for m <= 12, hashed for m <= 64.
  std::vector<std::optional<Rational>> dense_base_;
  std::vector<std::unordered_map<std::uint64_t, Rational>> sparse_base_;

  // Scratch state for the allocation being evaluated.
  std::vector<PairParts> parts_;  // n x n, parts_[i * n + j]
  std::vector<std::uint64_t> masks_;
  std::vector<Bundle> bundles_;
};

[[nodiscard]] FairnessReport full_report(const Instance& instance, const Allocation& allocation,
                                         const EvalOptions& options = {});

}  // namespace fairdiv

#endif  // FAIRDIV_MEASURES_HPP_
