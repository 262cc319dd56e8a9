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

#include "fairdiv/instance.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <utility>

#include "fairdiv/errors.hpp"

namespace fairdiv {

Instance::Instance(std::size_t agent_count, std::vector<std::string> good_labels,
                   std::vector<std::vector<Rational>> valuations, std::string name)
    : agents_(agent_count), labels_(std::move(good_labels)), name_(std::move(name)) {
  if (agents_ == 0) {
    throw Error(ErrorKind::invalid_parameter, "agents", "at least one agent is required");
  }
  std::set<std::string_view> seen;
  for (const auto& label : labels_) {
    if (!seen.insert(label).second) {
      throw Error(ErrorKind::duplicate_label, "goods", "label '" + label + "' appears twice");
    }
  }
  if (valuations.size() != agents_) {
    throw Error(ErrorKind::dimension_mismatch, "valuations",
                "expected " + std::to_string(agents_) + " rows, got " +
                    std::to_string(valuations.size()));
  }
  values_.reserve(agents_ * labels_.size());
  for (std::size_t i = 0; i < agents_; ++i) {
    if (valuations[i].size() != labels_.size()) {
      throw Error(ErrorKind::dimension_mismatch, "valuations[" + std::to_string(i) + "]",
                  "expected " + std::to_string(labels_.size()) + " entries, got " +
                      std::to_string(valuations[i].size()));
    }
    for (std::size_t g = 0; g < labels_.size(); ++g) {
      if (valuations[i][g].sign() < 0) {
        throw Error(ErrorKind::negative_valuation,
                    "valuations[" + std::to_string(i) + "][" + std::to_string(g) + "]",
                    "value " + valuations[i][g].to_string() + " is below zero");
      }
      values_.push_back(std::move(valuations[i][g]));
    }
  }
}

Instance Instance::from_rows(std::vector<std::vector<Rational>> valuations, std::string name) {
  const std::size_t m = valuations.empty() ? 0 : valuations.front().size();
  std::vector<std::string> labels;
  labels.reserve(m);
  for (std::size_t g = 0; g < m; ++g) labels.push_back("g" + std::to_string(g + 1));
  const std::size_t n = valuations.size();
  return Instance(n, std::move(labels), std::move(valuations), std::move(name));
}

const Rational& Instance::value(AgentIndex agent, GoodIndex good) const {
  if (agent >= agents_ || good >= labels_.size()) {
    throw Error(ErrorKind::index_out_of_range, "value",
                "agent " + std::to_string(agent) + ", good " + std::to_string(good));
  }
  return values_[agent * labels_.size() + good];
}

std::span<const Rational> Instance::row(AgentIndex agent) const {
  if (agent >= agents_) {
    throw Error(ErrorKind::index_out_of_range, "agent", std::to_string(agent));
  }
  return std::span<const Rational>(values_).subspan(agent * labels_.size(), labels_.size());
}

Rational bundle_value(const Instance& instance, AgentIndex agent, std::span<const GoodIndex> bundle) {
  const auto row = instance.row(agent);
  Rational total;
  for (GoodIndex g : bundle) {
    if (g >= row.size()) throw Error(ErrorKind::index_out_of_range, "good", std::to_string(g));
    total += row[g];
  }
  return total;
}

Allocation::Allocation(std::vector<Bundle> bundles, std::size_t good_count)
    : bundles_(std::move(bundles)),
      owners_(good_count, std::numeric_limits<AgentIndex>::max()) {
  for (AgentIndex i = 0; i < bundles_.size(); ++i) {
    auto& bundle = bundles_[i];
    std::sort(bundle.begin(), bundle.end());
    for (GoodIndex g : bundle) {
      if (g >= good_count) {
        throw Error(ErrorKind::index_out_of_range, "bundles[" + std::to_string(i) + "]",
                    "good " + std::to_string(g) + " does not exist");
      }
      if (owners_[g] != std::numeric_limits<AgentIndex>::max()) {
        throw Error(ErrorKind::good_allocated_twice, "bundles[" + std::to_string(i) + "]",
                    "good " + std::to_string(g));
      }
      owners_[g] = i;
    }
  }
  for (GoodIndex g = 0; g < good_count; ++g) {
    if (owners_[g] == std::numeric_limits<AgentIndex>::max()) {
      throw Error(ErrorKind::good_missing, "bundles", "good " + std::to_string(g));
    }
  }
}

Allocation Allocation::from_owners(std::span<const AgentIndex> owners, std::size_t agent_count) {
  std::vector<Bundle> bundles(agent_count);
  for (GoodIndex g = 0; g < owners.size(); ++g) {
    if (owners[g] >= agent_count) {
      throw Error(ErrorKind::index_out_of_range, "owners", "agent " + std::to_string(owners[g]));
    }
    bundles[owners[g]].push_back(g);
  }
  return Allocation(std::move(bundles), owners.size());
}

const Bundle& Allocation::bundle(AgentIndex agent) const {
  if (agent >= bundles_.size()) throw Error(ErrorKind::index_out_of_range, "agent", std::to_string(agent));
  return bundles_[agent];
}

AgentIndex Allocation::owner(GoodIndex good) const {
  if (good >= owners_.size()) throw Error(ErrorKind::index_out_of_range, "good", std::to_string(good));
  return owners_[good];
}

void Allocation::check_against(const Instance& instance) const {
  if (bundles_.size() != instance.agent_count()) {
    throw Error(ErrorKind::bundle_count_mismatch, "bundles",
                "expected " + std::to_string(instance.agent_count()) + " bundles, got " +
                    std::to_string(bundles_.size()));
  }
  if (owners_.size() != instance.good_count()) {
    throw Error(ErrorKind::dimension_mismatch, "bundles",
                "allocation covers " + std::to_string(owners_.size()) + " goods, instance has " +
                    std::to_string(instance.good_count()));
  }
}

}  // namespace fairdiv
