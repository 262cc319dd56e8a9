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

#ifndef FAIRDIV_INSTANCE_HPP_
#define FAIRDIV_INSTANCE_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fairdiv/rational.hpp"

namespace fairdiv {

using AgentIndex = std::size_t;
using GoodIndex = std::size_t;
using Bundle = std::vector<GoodIndex>;

/// n agents with additive valuations over m indivisible goods. Immutable once
/// constructed; the constructor validates every invariant.
class Instance {
 public:
  /// `valuations[i][g]` is agent i's value for good g. Labels are display
  /// metadata only; goods are identified by position.
  Instance(std::size_t agent_count, std::vector<std::string> good_labels,
           std::vector<std::vector<Rational>> valuations, std::string name = {});

  /// Labels default to g1, g2, ...
  static Instance from_rows(std::vector<std::vector<Rational>> valuations, std::string name = {});

  [[nodiscard]] std::size_t agent_count() const noexcept { return agents_; }
  [[nodiscard]] std::size_t good_count() const noexcept { return labels_.size(); }
  [[nodiscard]] const std::string& name() const noexcept { return name_; }
  [[nodiscard]] const std::vector<std::string>& good_labels() const noexcept { return labels_; }

  [[nodiscard]] const Rational& value(AgentIndex agent, GoodIndex good) const;
  [[nodiscard]] std::span<const Rational> row(AgentIndex agent) const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::size_t agents_;
  std::vector<std::string> labels_;
  std::vector<Rational> values_;  // row-major, agents_ x labels_.size()
  std::string name_;
};

/// v_i(S): exact sum of agent i's values over the goods in `bundle`.
[[nodiscard]] Rational bundle_value(const Instance& instance, AgentIndex agent,
                                    std::span<const GoodIndex> bundle);

/// An ordered partition of the goods {0, ..., m-1} into one bundle per agent.
/// Bundles may be empty; each bundle is kept sorted.
class Allocation {
 public:
  /// Validates the partition property against `good_count`.
  Allocation(std::vector<Bundle> bundles, std::size_t good_count);

  /// owners[g] is the agent receiving good g.
  static Allocation from_owners(std::span<const AgentIndex> owners, std::size_t agent_count);

  [[nodiscard]] std::size_t agent_count() const noexcept { return bundles_.size(); }
  [[nodiscard]] std::size_t good_count() const noexcept { return owners_.size(); }
  [[nodiscard]] const Bundle& bundle(AgentIndex agent) const;
  [[nodiscard]] const std::vector<Bundle>& bundles() const noexcept { return bundles_; }
  [[nodiscard]] AgentIndex owner(GoodIndex good) const;
  [[nodiscard]] const std::vector<AgentIndex>& owners() const noexcept { return owners_; }

  /// Throws unless the allocation has one bundle per agent of `instance` and
  /// partitions exactly its goods.
  void check_against(const Instance& instance) const;

  friend bool operator==(const Allocation&, const Allocation&) = default;

 private:
  std::vector<Bundle> bundles_;
  std::vector<AgentIndex> owners_;
};

}  // namespace fairdiv

#endif  // FAIRDIV_INSTANCE_HPP_
