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

// FairnessReport documents.
//
//   {"aggregates": {"ef": r, "ef1": r, "efx": r, "mms": r, "pmms": r},
//    "decimal":    {same keys, 15 significant digits},   (decimal only)
//    "agents": [{"agent": 1, "value": r, "maximin_share": r, "mms": r}, ...],
//    "pairs":  [{"i": 1, "j": 2, "ef": r, "ef1": r, "efx": r, "pmms": r}, ...]}
//
// r is an exact rational string or "unbounded". Agents are numbered from 1.

#ifndef FAIRDIV_REPORT_JSON_HPP_
#define FAIRDIV_REPORT_JSON_HPP_

#include "fairdiv/json_io.hpp"
#include "fairdiv/measures.hpp"

namespace fairdiv {

struct ReportJsonOptions {
  /// Adds decimal renderings of the aggregates and of every pair and agent
  /// entry. Display only; the exact strings are always present.
  bool decimal_detail = false;
  bool include_pairs = true;
};

[[nodiscard]] Json to_json(const Ratio& ratio);
[[nodiscard]] Json to_json(const FairnessReport& report, const ReportJsonOptions& options = {});

}  // namespace fairdiv

#endif  // FAIRDIV_REPORT_JSON_HPP_
