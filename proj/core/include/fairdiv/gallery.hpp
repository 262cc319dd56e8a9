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

// Named instances: the worked example and the tightness and counterexample
// constructions, each with its intended allocation and the exact ratios that
// allocation should evaluate to.
//
// Agents that a construction only needs to be content (the "dummy" or
// "not envious" agents) value each good in their own bundle at 1 and every
// other good at 0.

#ifndef FAIRDIV_GALLERY_HPP_
#define FAIRDIV_GALLERY_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fairdiv/instance.hpp"
#include "fairdiv/json_io.hpp"
#include "fairdiv/measures.hpp"

namespace fairdiv {

struct ParamSpec {
  std::string name;
  Rational default_value;
  bool integer = false;
  std::string domain;  // human-readable constraint
};

struct GalleryEntry {
  std::string id;
  std::string summary;
  std::vector<ParamSpec> params;
  /// Rule whose guarantee the construction meets with equality, if any.
  std::optional<std::string> tight_rule;
  std::optional<Notion> tight_notion;
};

using Params = std::map<std::string, Rational, std::less<>>;

struct Scenario {
  std::string name;
  Allocation allocation;
  /// Ordered (notion, ratio) pairs the allocation must reproduce exactly.
  std::vector<std::pair<Notion, Ratio>> expected;
};

struct Construction {
  std::string id;
  Params params;  // defaults filled in
  Instance instance;
  std::vector<Scenario> scenarios;  // the first is the primary allocation
  std::string note;
};

/// Stable catalog order.
[[nodiscard]] const std::vector<GalleryEntry>& list_entries();
[[nodiscard]] const GalleryEntry* find_entry(std::string_view id);

/// Throws unknown_entry for an unknown id and invalid_parameter for unknown
/// parameters or values outside an entry's domain.
[[nodiscard]] Construction build(std::string_view id, const Params& params = {});

[[nodiscard]] Json to_json(const GalleryEntry& entry);
[[nodiscard]] Json expected_to_json(const Scenario& scenario);

}  // namespace fairdiv

#endif  // FAIRDIV_GALLERY_HPP_
