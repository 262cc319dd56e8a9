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

// Exact max-min partitioning.
//
// maximin_share() computes the k-maximin share of one agent over a set of
// goods, together with a partition achieving it. The solver works on the
// agent's values scaled to a common integer denominator and groups goods of
// equal value into types, so its state space is the product of (count + 1)
// over value types rather than 2^|goods|. Candidate thresholds are the
// distinct bundle sums; the largest feasible one is found by binary search,
// where feasibility asks whether k disjoint bundles of value >= T can be packed
// (memoized over the multiset of remaining goods).
//
// pairwise_base() is the k = 2 special case via meet-in-the-middle subset sums.

#ifndef FAIRDIV_MAXIMIN_HPP_
#define FAIRDIV_MAXIMIN_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "fairdiv/instance.hpp"
#include "fairdiv/rational.hpp"

namespace fairdiv {

struct SolverLimits {
  /// Upper bound on log2 of the solver's state space. With pairwise distinct
  /// values this is the number of positively valued goods.
  std::size_t mms_log2_states = 22;
  /// Upper bound on positively valued goods for the meet-in-the-middle split.
  /// Larger sets fall back to the typed solver.
  std::size_t pairwise_goods = 34;
};

struct MmsQuery {
  AgentIndex agent = 0;
  std::size_t parts = 1;
  std::vector<GoodIndex> goods;
};

struct MmsResult {
  Rational value;
  /// `parts` bundles of good indices; the minimum bundle value equals `value`.
  std::vector<Bundle> partition;
};

/// k-maximin share of a list of values. Partition indices refer to positions
/// in `values`.
[[nodiscard]] MmsResult max_min_partition(std::span<const Rational> values, std::size_t parts,
                                          const SolverLimits& limits = {});

/// mu_i(k, S) with a defining partition of S.
[[nodiscard]] MmsResult maximin_share(const Instance& instance, const MmsQuery& query,
                                      const SolverLimits& limits = {});

/// mu_i(2, S): the largest v_i(B) with B a subset of S and 2 v_i(B) <= v_i(S).
[[nodiscard]] Rational pairwise_base(const Instance& instance, AgentIndex agent,
                                     std::span<const GoodIndex> union_goods,
                                     const SolverLimits& limits = {});

/// Same as pairwise_base over a bare list of values.
[[nodiscard]] Rational max_half_subset_sum(std::span<const Rational> values,
                                           const SolverLimits& limits = {});

}  // namespace fairdiv

#endif  // FAIRDIV_MAXIMIN_HPP_
