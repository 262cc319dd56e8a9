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

#include "fairdiv/report_json.hpp"

#include <string>

namespace fairdiv {

Json to_json(const Ratio& ratio) { return ratio.to_string(); }

Json to_json(const FairnessReport& report, const ReportJsonOptions& options) {
  Json doc = Json::object();
  Json exact = Json::object();
  Json decimal = Json::object();
  for (Notion n : kAllNotions) {
    const std::string key(to_string(n));
    exact[key] = report.aggregate(n).to_string();
    decimal[key] = report.aggregate(n).to_decimal();
  }
  doc["aggregates"] = std::move(exact);
  if (options.decimal_detail) doc["decimal"] = std::move(decimal);

  Json agents = Json::array();
  for (std::size_t i = 0; i < report.mms_agent.size(); ++i) {
    Json a = Json::object();
    a["agent"] = i + 1;
    a["value"] = report.own_value[i].to_string();
    a["maximin_share"] = report.maximin_share[i].to_string();
    a["mms"] = report.mms_agent[i].to_string();
    if (options.decimal_detail) {
      a["decimal"] = {{"value", report.own_value[i].to_decimal()},
                      {"maximin_share", report.maximin_share[i].to_decimal()},
                      {"mms", report.mms_agent[i].to_decimal()}};
    }
    agents.push_back(std::move(a));
  }
  doc["agents"] = std::move(agents);

  if (options.include_pairs) {
    Json pairs = Json::array();
    for (const auto& p : report.pairs) {
      Json e = Json::object();
      e["i"] = p.i + 1;
      e["j"] = p.j + 1;
      e["ef"] = p.ef.to_string();
      e["ef1"] = p.ef1.to_string();
      e["efx"] = p.efx.to_string();
      e["pmms"] = p.pmms.to_string();
      if (options.decimal_detail) {
        e["decimal"] = {{"ef", p.ef.to_decimal()},
                        {"ef1", p.ef1.to_decimal()},
                        {"efx", p.efx.to_decimal()},
                        {"pmms", p.pmms.to_decimal()}};
      }
      pairs.push_back(std::move(e));
    }
    doc["pairs"] = std::move(pairs);
  }
  return doc;
}

}  // namespace fairdiv
