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

#include "fairdiv/algorithms.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

#include "fairdiv/errors.hpp"

namespace fairdiv {

Allocation round_robin(const Instance& instance, const std::vector<AgentIndex>& agent_order) {
  const std::size_t n = instance.agent_count();
  const std::size_t m = instance.good_count();
  std::vector<AgentIndex> order = agent_order;
  if (order.empty()) {
    order.resize(n);
    std::iota(order.begin(), order.end(), AgentIndex{0});
  }
  std::vector<AgentIndex> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (sorted.size() != n || sorted[k] != k) {
      throw Error(ErrorKind::invalid_parameter, "agent_order", "must be a permutation of the agents");
    }
  }

  std::vector<bool> taken(m, false);
  std::vector<AgentIndex> owners(m, 0);
  for (std::size_t turn = 0; turn < m; ++turn) {
    const AgentIndex agent = order[turn % n];
    const auto row = instance.row(agent);
    std::optional<GoodIndex> pick;
    for (GoodIndex g = 0; g < m; ++g) {
      if (!taken[g] && (!pick || row[*pick] < row[g])) pick = g;
    }
    taken[*pick] = true;
    owners[*pick] = agent;
  }
  return Allocation::from_owners(owners, n);
}

CommonOrder detect_common_order(const Instance& instance) {
  const std::size_t n = instance.agent_count();
  const std::size_t m = instance.good_count();
  CommonOrder out;
  out.order.resize(m);
  std::iota(out.order.begin(), out.order.end(), GoodIndex{0});
  std::stable_sort(out.order.begin(), out.order.end(), [&](GoodIndex a, GoodIndex b) {
    for (AgentIndex i = 0; i < n; ++i) {
      const auto c = instance.value(i, a) <=> instance.value(i, b);
      if (c != 0) return c > 0;
    }
    return false;
  });
  out.valid = true;
  for (AgentIndex i = 0; i < n && out.valid; ++i) {
    for (std::size_t k = 1; k < m; ++k) {
      if (instance.value(i, out.order[k - 1]) < instance.value(i, out.order[k])) {
        out.valid = false;
        break;
      }
    }
  }
  return out;
}

namespace {

// Directed cycle in the envy graph: lowest start first, neighbours ascending.
std::vector<AgentIndex> find_cycle(const std::vector<std::vector<bool>>& envies) {
  const std::size_t n = envies.size();
  enum class Mark { fresh, active, done };
  std::vector<Mark> mark(n, Mark::fresh);
  std::vector<AgentIndex> stack;
  std::vector<AgentIndex> cycle;

  auto visit = [&](auto&& self, AgentIndex u) -> bool {
    mark[u] = Mark::active;
    stack.push_back(u);
    for (AgentIndex v = 0; v < n; ++v) {
      if (!envies[u][v]) continue;
      if (mark[v] == Mark::active) {
        auto it = std::find(stack.begin(), stack.end(), v);
        cycle.assign(it, stack.end());
        return true;
      }
      if (mark[v] == Mark::fresh && self(self, v)) return true;
    }
    stack.pop_back();
    mark[u] = Mark::done;
    return false;
  };
  for (AgentIndex s = 0; s < n; ++s) {
    if (mark[s] == Mark::fresh && visit(visit, s)) return cycle;
  }
  return {};
}

}  // namespace

Allocation ordered_efx(const Instance& instance, const CommonOrder& order, OrderedEfxStats* stats) {
  if (!order.valid) {
    throw Error(ErrorKind::precondition_violated, "order", "agents do not share a common ordering of the goods");
  }
  const std::size_t n = instance.agent_count();
  const std::size_t m = instance.good_count();
  if (order.order.size() != m) throw Error(ErrorKind::dimension_mismatch, "order", "one entry per good");

  std::vector<Bundle> bundles(n);
  // worth[i][j] = v_i(A_j)
  std::vector<std::vector<Rational>> worth(n, std::vector<Rational>(n));
  std::vector<std::vector<bool>> envies(n, std::vector<bool>(n, false));
  auto refresh = [&] {
    for (AgentIndex i = 0; i < n; ++i) {
      for (AgentIndex j = 0; j < n; ++j) envies[i][j] = worth[i][i] < worth[i][j];
    }
  };

  const std::size_t rotation_limit = std::max<std::size_t>(1, m * n * n);
  std::size_t rotations = 0;
  for (GoodIndex g : order.order) {
    refresh();
    std::optional<AgentIndex> source;
    while (!source) {
      for (AgentIndex j = 0; j < n && !source; ++j) {
        bool envied = false;
        for (AgentIndex i = 0; i < n; ++i) envied = envied || envies[i][j];
        if (!envied) source = j;
      }
      if (source) break;
      const auto cycle = find_cycle(envies);
      if (cycle.empty()) throw std::logic_error("envy graph without sources must contain a cycle");
      if (++rotations > rotation_limit) throw std::logic_error("envy-cycle rotations exceeded m * n^2");
      // cycle[k] envies cycle[k + 1]; each takes the bundle it envies.
      std::vector<Bundle> moved;
      std::vector<std::vector<Rational>> moved_worth;
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        const AgentIndex next = cycle[(k + 1) % cycle.size()];
        moved.push_back(bundles[next]);
        std::vector<Rational> column(n);
        for (AgentIndex i = 0; i < n; ++i) column[i] = worth[i][next];
        moved_worth.push_back(std::move(column));
      }
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        bundles[cycle[k]] = std::move(moved[k]);
        for (AgentIndex i = 0; i < n; ++i) worth[i][cycle[k]] = moved_worth[k][i];
      }
      refresh();
    }
    bundles[*source].push_back(g);
    for (AgentIndex i = 0; i < n; ++i) worth[i][*source] += instance.value(i, g);
  }
  if (stats) stats->rotations = rotations;
  return Allocation(std::move(bundles), m);
}

}  // namespace fairdiv
