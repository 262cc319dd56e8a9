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

#include "fairdiv/json_io.hpp"

#include <utility>

#include "fairdiv/errors.hpp"

namespace fairdiv {
namespace {

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::malformed_json, "", e.what());
  }
}

const Json& require(const Json& doc, const char* key) {
  if (!doc.is_object()) throw Error(ErrorKind::wrong_type, "", "document must be an object");
  auto it = doc.find(key);
  if (it == doc.end()) throw Error(ErrorKind::missing_field, key, "required");
  return *it;
}

Rational valuation_from_json(const Json& node, const std::string& field) {
  if (!node.is_string()) throw Error(ErrorKind::wrong_type, field, "valuation must be a rational string");
  return parse_valuation(node.get<std::string>(), field);
}

std::size_t index_from_json(const Json& node, const std::string& field) {
  if (!node.is_number_integer()) throw Error(ErrorKind::wrong_type, field, "expected an integer");
  if (node.is_number_unsigned()) return node.get<std::size_t>();
  const auto v = node.get<std::int64_t>();
  if (v < 0) throw Error(ErrorKind::index_out_of_range, field, std::to_string(v));
  return static_cast<std::size_t>(v);
}

}  // namespace

Rational parse_valuation(std::string_view text, const std::string& field) {
  if (!text.empty() && text.front() == '-') {
    throw Error(ErrorKind::negative_valuation, field, std::string(text));
  }
  try {
    return Rational::parse(text);
  } catch (const Error&) {
    throw Error(ErrorKind::invalid_rational, field, "'" + std::string(text) + "' is not p or p/q");
  }
}

Instance instance_from_json(const Json& doc) {
  const Json& agents = require(doc, "agents");
  if (!agents.is_number_integer() || agents.get<std::int64_t>() < 1) {
    throw Error(ErrorKind::wrong_type, "agents", "must be a positive integer");
  }
  const auto n = agents.get<std::size_t>();

  const Json& goods = require(doc, "goods");
  if (!goods.is_array()) throw Error(ErrorKind::wrong_type, "goods", "must be an array of strings");
  std::vector<std::string> labels;
  labels.reserve(goods.size());
  for (std::size_t g = 0; g < goods.size(); ++g) {
    if (!goods[g].is_string()) {
      throw Error(ErrorKind::wrong_type, "goods[" + std::to_string(g) + "]", "must be a string");
    }
    labels.push_back(goods[g].get<std::string>());
  }

  const Json& rows = require(doc, "valuations");
  if (!rows.is_array()) throw Error(ErrorKind::wrong_type, "valuations", "must be an array of rows");
  std::vector<std::vector<Rational>> valuations;
  valuations.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string row_field = "valuations[" + std::to_string(i) + "]";
    if (!rows[i].is_array()) throw Error(ErrorKind::wrong_type, row_field, "must be an array");
    std::vector<Rational> row;
    row.reserve(rows[i].size());
    for (std::size_t g = 0; g < rows[i].size(); ++g) {
      row.push_back(valuation_from_json(rows[i][g], row_field + "[" + std::to_string(g) + "]"));
    }
    valuations.push_back(std::move(row));
  }

  std::string name;
  if (auto it = doc.find("name"); it != doc.end() && !it->is_null()) {
    if (!it->is_string()) throw Error(ErrorKind::wrong_type, "name", "must be a string");
    name = it->get<std::string>();
  }
  return Instance(n, std::move(labels), std::move(valuations), std::move(name));
}

Allocation allocation_from_json(const Json& doc, const Instance& instance) {
  const Json& bundles = require(doc, "bundles");
  if (!bundles.is_array()) throw Error(ErrorKind::wrong_type, "bundles", "must be an array");
  if (bundles.size() != instance.agent_count()) {
    throw Error(ErrorKind::bundle_count_mismatch, "bundles",
                "expected " + std::to_string(instance.agent_count()) + " bundles, got " +
                    std::to_string(bundles.size()));
  }
  std::vector<Bundle> out;
  out.reserve(bundles.size());
  for (std::size_t i = 0; i < bundles.size(); ++i) {
    const std::string field = "bundles[" + std::to_string(i) + "]";
    if (!bundles[i].is_array()) throw Error(ErrorKind::wrong_type, field, "must be an array");
    Bundle bundle;
    for (const auto& g : bundles[i]) bundle.push_back(index_from_json(g, field));
    out.push_back(std::move(bundle));
  }
  Allocation allocation(std::move(out), instance.good_count());
  allocation.check_against(instance);
  return allocation;
}

Instance parse_instance(std::string_view text) { return instance_from_json(parse_document(text)); }

Allocation parse_allocation(std::string_view text, const Instance& instance) {
  return allocation_from_json(parse_document(text), instance);
}

Json to_json(const Instance& instance) {
  Json doc = Json::object();
  if (!instance.name().empty()) doc["name"] = instance.name();
  doc["agents"] = instance.agent_count();
  doc["goods"] = instance.good_labels();
  Json rows = Json::array();
  for (AgentIndex i = 0; i < instance.agent_count(); ++i) {
    Json row = Json::array();
    for (const auto& v : instance.row(i)) row.push_back(v.to_string());
    rows.push_back(std::move(row));
  }
  doc["valuations"] = std::move(rows);
  return doc;
}

Json to_json(const Allocation& allocation) {
  Json bundles = Json::array();
  for (const auto& bundle : allocation.bundles()) bundles.push_back(bundle);
  Json doc = Json::object();
  doc["bundles"] = std::move(bundles);
  return doc;
}

std::string serialize(const Instance& instance) { return to_json(instance).dump(2) + "\n"; }

std::string serialize(const Allocation& allocation) { return to_json(allocation).dump(2) + "\n"; }

}  // namespace fairdiv
