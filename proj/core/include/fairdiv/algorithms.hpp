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

// Constructive allocation procedures. Ties are broken by lowest index.

#ifndef FAIRDIV_ALGORITHMS_HPP_
#define FAIRDIV_ALGORITHMS_HPP_

#include <cstddef>
#include <vector>

#include "fairdiv/instance.hpp"

namespace fairdiv {

/// Agents pick in cyclic `agent_order`, each taking a most valuable remaining
/// good. An empty order means 0, 1, ..., n-1.
[[nodiscard]] Allocation round_robin(const Instance& instance, const std::vector<AgentIndex>& agent_order = {});

struct CommonOrder {
  /// Good indices, non-increasing in value for every agent when `valid`.
  std::vector<GoodIndex> order;
  bool valid = false;
};

/// Goods sorted by their value columns in decreasing lexicographic order (ties
/// by index), then verified against every agent. Finds a common order whenever
/// one exists.
[[nodiscard]] CommonOrder detect_common_order(const Instance& instance);

struct OrderedEfxStats {
  std::size_t rotations = 0;
};

/// Envy-cycle elimination over the common order: each good goes to the
/// lowest-index unenvied agent; when every agent is envied, the first cycle
/// found by depth-first search is rotated. Throws precondition_violated if
/// `order` is not valid.
[[nodiscard]] Allocation ordered_efx(const Instance& instance, const CommonOrder& order,
                                     OrderedEfxStats* stats = nullptr);

}  // namespace fairdiv

#endif  // FAIRDIV_ALGORITHMS_HPP_
