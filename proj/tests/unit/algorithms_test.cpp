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

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "fairdiv/algorithms.hpp"
#include "fairdiv/errors.hpp"
#include "fairdiv/gallery.hpp"
#include "fairdiv/measures.hpp"
#include "naive.hpp"

namespace fairdiv {
namespace {

// Rows that rank goods identically: a random permutation, then random
// non-increasing values along it per agent.
Instance common_order_instance(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  std::vector<GoodIndex> perm(m);
  for (GoodIndex g = 0; g < m; ++g) perm[g] = g;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::uniform_int_distribution<int> step(0, 3);
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(m));
  for (auto& row : rows) {
    std::int64_t v = 40;
    for (GoodIndex g : perm) {
      row[g] = Rational(v);
      v = std::max<std::int64_t>(0, v - step(rng));
    }
  }
  return Instance::from_rows(std::move(rows));
}

TEST(RoundRobinTest, PicksAndTieBreaks) {
  const Instance inst = Instance::from_rows({{1, 5, 5, 2}, {9, 1, 1, 1}});
  const Allocation a = round_robin(inst);
  EXPECT_EQ(a.bundles(), (std::vector<Bundle>{{1, 2}, {0, 3}}));
  const Allocation b = round_robin(inst, {1, 0});
  EXPECT_EQ(b.bundles(), (std::vector<Bundle>{{1, 3}, {0, 2}}));
  EXPECT_THROW(static_cast<void>(round_robin(inst, {0, 0})), Error);
  EXPECT_THROW(static_cast<void>(round_robin(inst, {0})), Error);
}

TEST(RoundRobinTest, IsEf1OnRandomInstances) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + t % 4;
    const Instance inst = naive::random_instance(rng, n, t % 11, 0, 9);
    std::vector<AgentIndex> order(n);
    for (AgentIndex i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    const Allocation a = round_robin(inst, order);
    const auto ref = naive::evaluate(inst, a.bundles(), false, false);
    ASSERT_TRUE(!ref.ef1 || *ref.ef1 >= 1) << "t=" << t;
  }
}

TEST(CommonOrderTest, Detection) {
  const Instance same = Instance::from_rows({{1, 3, 2}, {2, 9, 5}});
  const CommonOrder c = detect_common_order(same);
  EXPECT_TRUE(c.valid);
  EXPECT_EQ(c.order, (std::vector<GoodIndex>{1, 2, 0}));

  // Ties for one agent are broken by the other agent's strict ranking.
  const Instance ties = Instance::from_rows({{2, 2, 1}, {3, 4, 1}});
  const CommonOrder t = detect_common_order(ties);
  EXPECT_TRUE(t.valid);
  EXPECT_EQ(t.order, (std::vector<GoodIndex>{1, 0, 2}));

  const Instance clash = Instance::from_rows({{1, 2}, {2, 1}});
  EXPECT_FALSE(detect_common_order(clash).valid);
  EXPECT_FALSE(detect_common_order(build("example1").instance).valid);
  EXPECT_THROW(static_cast<void>(ordered_efx(clash, detect_common_order(clash))), Error);
}

TEST(OrderedEfxTest, IsEfxOnCommonOrderInstances) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + t % 3;
    const Instance inst = common_order_instance(rng, n, t % 10);
    const CommonOrder order = detect_common_order(inst);
    ASSERT_TRUE(order.valid);
    OrderedEfxStats stats;
    const Allocation a = ordered_efx(inst, order, &stats);
    a.check_against(inst);
    const auto ref = naive::evaluate(inst, a.bundles(), false, false);
    ASSERT_TRUE(!ref.efx || *ref.efx >= 1) << "t=" << t;
    ASSERT_TRUE(!ref.pmms || *ref.pmms >= naive::Q(2, 3)) << "t=" << t;
  }
}

TEST(OrderedEfxTest, RotatesEnvyCycles) {
  const Construction c = build("prop2-tight");
  const Allocation a = ordered_efx(c.instance, detect_common_order(c.instance));
  EXPECT_GE(full_report(c.instance, a).efx, Ratio::finite(1));

  // Some random common-order instances need rotations; all stay EFX.
  std::mt19937_64 rng(4);
  std::size_t rotated = 0;
  for (int t = 0; t < 300; ++t) {
    const Instance inst = common_order_instance(rng, 3, 8);
    OrderedEfxStats stats;
    const Allocation b = ordered_efx(inst, detect_common_order(inst), &stats);
    if (stats.rotations > 0) ++rotated;
    ASSERT_GE(full_report(inst, b).efx, Ratio::finite(1));
  }
  EXPECT_GT(rotated, 0U);
}

}  // namespace
}  // namespace fairdiv
