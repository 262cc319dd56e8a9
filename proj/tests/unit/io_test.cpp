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

#include <random>
#include <string>

#include <gtest/gtest.h>

#include "fairdiv/errors.hpp"
#include "fairdiv/instance.hpp"
#include "fairdiv/json_io.hpp"
#include "naive.hpp"

namespace fairdiv {
namespace {

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no fairdiv::Error thrown";
  return ErrorKind::malformed_json;
}

constexpr const char* kInstance = R"({
  "name": "tiny",
  "agents": 2,
  "goods": ["a", "b", "c"],
  "valuations": [["1", "2/4", "0"], ["3", "1", "7/3"]]
})";

TEST(InstanceTest, Accessors) {
  const Instance inst = parse_instance(kInstance);
  EXPECT_EQ(inst.name(), "tiny");
  EXPECT_EQ(inst.agent_count(), 2U);
  EXPECT_EQ(inst.good_count(), 3U);
  EXPECT_EQ(inst.value(0, 1), Rational(1, 2));
  EXPECT_EQ(inst.row(1).size(), 3U);
  const Bundle both{0, 2};
  EXPECT_EQ(bundle_value(inst, 1, both), Rational(16, 3));
  EXPECT_EQ(kind_of([&] { static_cast<void>(inst.value(2, 0)); }), ErrorKind::index_out_of_range);
}

TEST(InstanceTest, Validation) {
  using Rows = std::vector<std::vector<Rational>>;
  EXPECT_EQ(kind_of([] { Instance(0, {}, Rows{}); }), ErrorKind::invalid_parameter);
  EXPECT_EQ(kind_of([] { Instance(1, {"a", "a"}, Rows{{1, 1}}); }), ErrorKind::duplicate_label);
  EXPECT_EQ(kind_of([] { Instance(2, {"a"}, Rows{{1}}); }), ErrorKind::dimension_mismatch);
  EXPECT_EQ(kind_of([] { Instance(1, {"a", "b"}, Rows{{1}}); }), ErrorKind::dimension_mismatch);
  EXPECT_EQ(kind_of([] { Instance(1, {"a"}, Rows{{Rational(-1)}}); }), ErrorKind::negative_valuation);
  const Instance inst = Instance::from_rows(Rows{{1, 2}});
  EXPECT_EQ(inst.good_labels(), (std::vector<std::string>{"g1", "g2"}));
}

TEST(AllocationTest, Validation) {
  EXPECT_EQ(kind_of([] { Allocation({{0}, {0, 1}}, 2); }), ErrorKind::good_allocated_twice);
  EXPECT_EQ(kind_of([] { Allocation({{0}, {}}, 2); }), ErrorKind::good_missing);
  EXPECT_EQ(kind_of([] { Allocation({{0}, {5}}, 2); }), ErrorKind::index_out_of_range);
  const std::vector<AgentIndex> owners{0, 3};
  EXPECT_EQ(kind_of([&] { Allocation::from_owners(owners, 2); }), ErrorKind::index_out_of_range);

  const Instance inst = parse_instance(kInstance);
  EXPECT_EQ(kind_of([&] { Allocation({{0, 1, 2}}, 3).check_against(inst); }), ErrorKind::bundle_count_mismatch);
  EXPECT_EQ(kind_of([&] { Allocation({{0}, {1}}, 2).check_against(inst); }), ErrorKind::dimension_mismatch);
}

TEST(AllocationTest, OwnersAndSortedBundles) {
  const Allocation a({{2, 0}, {1}}, 3);
  EXPECT_EQ(a.bundle(0), (Bundle{0, 2}));
  EXPECT_EQ(a.owners(), (std::vector<AgentIndex>{0, 1, 0}));
  EXPECT_EQ(a.owner(1), 1U);
  const std::vector<AgentIndex> owners{1, 1, 0};
  EXPECT_EQ(Allocation::from_owners(owners, 3).bundles(), (std::vector<Bundle>{{2}, {0, 1}, {}}));
}

TEST(JsonIoTest, ParseErrors) {
  EXPECT_EQ(kind_of([] { return parse_instance("{"); }), ErrorKind::malformed_json);
  EXPECT_EQ(kind_of([] { return parse_instance("[]"); }), ErrorKind::wrong_type);
  EXPECT_EQ(kind_of([] { return parse_instance(R"({"agents": 1, "goods": []})"); }), ErrorKind::missing_field);
  EXPECT_EQ(kind_of([] { return parse_instance(R"({"agents": 0, "goods": [], "valuations": []})"); }),
            ErrorKind::wrong_type);
  EXPECT_EQ(kind_of([] { return parse_instance(R"({"agents": 1, "goods": ["a"], "valuations": [[1]]})"); }),
            ErrorKind::wrong_type);
  EXPECT_EQ(kind_of([] { return parse_instance(R"({"agents": 1, "goods": ["a"], "valuations": [["-1"]]})"); }),
            ErrorKind::negative_valuation);
  EXPECT_EQ(kind_of([] { return parse_instance(R"({"agents": 1, "goods": ["a"], "valuations": [["0.5"]]})"); }),
            ErrorKind::invalid_rational);
  EXPECT_EQ(kind_of([] { return parse_instance(R"({"agents": 1, "goods": ["a"], "valuations": [["1", "2"]]})"); }),
            ErrorKind::dimension_mismatch);

  const Instance inst = parse_instance(kInstance);
  EXPECT_EQ(kind_of([&] { return parse_allocation(R"({"bundles": [[0, 1, 2]]})", inst); }),
            ErrorKind::bundle_count_mismatch);
  EXPECT_EQ(kind_of([&] { return parse_allocation(R"({"bundles": [[0, 1], [1, 2]]})", inst); }),
            ErrorKind::good_allocated_twice);
  EXPECT_EQ(kind_of([&] { return parse_allocation(R"({"bundles": [[0], [1]]})", inst); }), ErrorKind::good_missing);
  EXPECT_EQ(kind_of([&] { return parse_allocation(R"({"bundles": [[0], [1, 9]]})", inst); }),
            ErrorKind::index_out_of_range);
  EXPECT_EQ(kind_of([&] { return parse_allocation(R"({"bundles": [[0], ["b"]]})", inst); }), ErrorKind::wrong_type);
}

TEST(JsonIoTest, CanonicalSerialization) {
  const Instance inst = parse_instance(kInstance);
  const std::string text = serialize(inst);
  EXPECT_NE(text.find("\"1/2\""), std::string::npos);
  EXPECT_EQ(text.back(), '\n');
  EXPECT_EQ(serialize(parse_instance(text)), text);
  const Allocation a = parse_allocation(R"({"bundles": [[2, 0], [1]]})", inst);
  EXPECT_EQ(to_json(a).dump(), R"({"bundles":[[0,2],[1]]})");
}

TEST(JsonIoTest, RoundTripsRandomInstances) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const Instance inst = naive::random_instance(rng, 1 + t % 4, t % 9, 0, 1000, 1 + t % 7);
    EXPECT_EQ(parse_instance(serialize(inst)), inst);
    const Allocation a = naive::random_allocation(rng, inst.agent_count(), inst.good_count());
    EXPECT_EQ(parse_allocation(serialize(a), inst), a);
  }
}

}  // namespace
}  // namespace fairdiv
