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

#ifndef FAIRDIV_ERRORS_HPP_
#define FAIRDIV_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace fairdiv {

enum class ErrorKind {
  malformed_json,
  missing_field,
  wrong_type,
  invalid_rational,
  negative_valuation,
  dimension_mismatch,
  duplicate_label,
  good_allocated_twice,
  good_missing,
  bundle_count_mismatch,
  index_out_of_range,
  size_limit_exceeded,
  budget_exceeded,
  precondition_violated,
  invalid_parameter,
  unknown_entry,
  rule_inapplicable,
};

[[nodiscard]] std::string_view to_string(ErrorKind kind) noexcept;

/// The single exception type thrown by the library. `field` names the input
/// location at fault (a JSON key, a parameter name, an index) when there is one.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string field, const std::string& message);

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }
  [[nodiscard]] const std::string& field() const noexcept { return field_; }

 private:
  ErrorKind kind_;
  std::string field_;
};

}  // namespace fairdiv

#endif  // FAIRDIV_ERRORS_HPP_
