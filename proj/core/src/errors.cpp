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

#include "fairdiv/errors.hpp"

#include <utility>

namespace fairdiv {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::malformed_json: return "malformed json";
    case ErrorKind::missing_field: return "missing field";
    case ErrorKind::wrong_type: return "wrong type";
    case ErrorKind::invalid_rational: return "invalid rational";
    case ErrorKind::negative_valuation: return "negative valuation";
    case ErrorKind::dimension_mismatch: return "dimension mismatch";
    case ErrorKind::duplicate_label: return "duplicate good label";
    case ErrorKind::good_allocated_twice: return "good allocated twice";
    case ErrorKind::good_missing: return "good missing";
    case ErrorKind::bundle_count_mismatch: return "bundle count mismatch";
    case ErrorKind::index_out_of_range: return "index out of range";
    case ErrorKind::size_limit_exceeded: return "size limit exceeded";
    case ErrorKind::budget_exceeded: return "budget exceeded";
    case ErrorKind::precondition_violated: return "precondition violated";
    case ErrorKind::invalid_parameter: return "invalid parameter";
    case ErrorKind::unknown_entry: return "unknown entry";
    case ErrorKind::rule_inapplicable: return "rule inapplicable";
  }
  return "error";
}

Error::Error(ErrorKind kind, std::string field, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) +
                         (field.empty() ? std::string() : " [" + field + "]") +
                         (message.empty() ? std::string() : ": " + message)),
      kind_(kind),
      field_(std::move(field)) {}

}  // namespace fairdiv
