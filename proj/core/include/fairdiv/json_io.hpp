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

// Instance and allocation documents.
//
//   instance:   {"name": str?, "agents": int, "goods": [str, ...],
//                "valuations": [[rational-string, ...], ...]}
//   allocation: {"bundles": [[int, ...], ...]}
//
// A rational-string matches ^[0-9]+(/[1-9][0-9]*)?$. The canonical form writes
// rationals in lowest terms and bundles with sorted indices.

#ifndef FAIRDIV_JSON_IO_HPP_
#define FAIRDIV_JSON_IO_HPP_

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "fairdiv/instance.hpp"

namespace fairdiv {

using Json = nlohmann::ordered_json;

[[nodiscard]] Instance parse_instance(std::string_view text);
[[nodiscard]] Allocation parse_allocation(std::string_view text, const Instance& instance);

[[nodiscard]] Instance instance_from_json(const Json& doc);
[[nodiscard]] Allocation allocation_from_json(const Json& doc, const Instance& instance);

[[nodiscard]] Json to_json(const Instance& instance);
[[nodiscard]] Json to_json(const Allocation& allocation);

/// Canonical text: two-space indentation, trailing newline.
[[nodiscard]] std::string serialize(const Instance& instance);
[[nodiscard]] std::string serialize(const Allocation& allocation);

/// Strict valuation grammar (non-negative, no sign).
[[nodiscard]] Rational parse_valuation(std::string_view text, const std::string& field);

}  // namespace fairdiv

#endif  // FAIRDIV_JSON_IO_HPP_
