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

#include "fairdiv/oracle.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <string_view>

#include "fairdiv/errors.hpp"

namespace fairdiv {

OracleBudget OracleBudget::from_env() {
  OracleBudget budget;
  if (const char* env = std::getenv("FAIRDIV_BUDGET"); env != nullptr && *env != '\0') {
    const std::string_view text(env);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
      throw Error(ErrorKind::invalid_parameter, "FAIRDIV_BUDGET", "'" + std::string(text) + "' is not a count");
    }
    budget.max_allocations = value;
  }
  return budget;
}

std::uint64_t allocation_count(std::size_t agents, std::size_t goods) {
  std::uint64_t count = 1;
  for (std::size_t g = 0; g < goods; ++g) {
    if (agents != 0 && count > std::numeric_limits<std::uint64_t>::max() / agents) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    count *= agents;
  }
  return count;
}

void check_budget(const Instance& instance, const OracleBudget& budget) {
  const std::uint64_t count = allocation_count(instance.agent_count(), instance.good_count());
  if (count > budget.max_allocations) {
    throw Error(ErrorKind::budget_exceeded, "budget",
                std::to_string(instance.agent_count()) + "^" + std::to_string(instance.good_count()) +
                    " allocations exceed the budget of " + std::to_string(budget.max_allocations));
  }
}

std::uint64_t for_each_allocation(const Instance& instance, const OracleBudget& budget,
                                  const std::function<bool(std::span<const AgentIndex>)>& visit) {
  check_budget(instance, budget);
  const std::size_t n = instance.agent_count();
  const std::size_t m = instance.good_count();
  std::vector<AgentIndex> owners(m, 0);
  std::uint64_t visited = 0;
  while (true) {
    ++visited;
    if (!visit(owners)) return visited;
    std::size_t g = m;
    while (g > 0 && owners[g - 1] + 1 == n) owners[--g] = 0;
    if (g == 0) return visited;
    ++owners[g - 1];
  }
}

std::vector<Allocation> enumerate_allocations(const Instance& instance, const OracleBudget& budget) {
  std::vector<Allocation> out;
  for_each_allocation(instance, budget, [&](std::span<const AgentIndex> owners) {
    out.push_back(Allocation::from_owners(owners, instance.agent_count()));
    return true;
  });
  return out;
}

BestAlpha best_alpha(const Instance& instance, Notion notion, const OracleBudget& budget,
                     const EvalOptions& options) {
  Evaluator evaluator(instance, options);
  std::optional<Ratio> best;
  std::vector<AgentIndex> best_owners;
  for_each_allocation(instance, budget, [&](std::span<const AgentIndex> owners) {
    Ratio r = evaluator.aggregates(owners, mask_of(notion))[notion];
    if (!best || *best < r) {
      best = std::move(r);
      best_owners.assign(owners.begin(), owners.end());
    }
    return !best->is_unbounded();
  });
  return BestAlpha{*best, Allocation::from_owners(best_owners, instance.agent_count())};
}

std::optional<Allocation> exact_fair_search(const Instance& instance, Notion notion, const Rational& alpha,
                                            const OracleBudget& budget, const EvalOptions& options) {
  Evaluator evaluator(instance, options);
  std::optional<Allocation> found;
  for_each_allocation(instance, budget, [&](std::span<const AgentIndex> owners) {
    if (evaluator.aggregates(owners, mask_of(notion))[notion].satisfies(alpha)) {
      found = Allocation::from_owners(owners, instance.agent_count());
      return false;
    }
    return true;
  });
  return found;
}

MonotonicityReport check_monotonicity(const Instance& instance, AgentIndex agent, std::size_t trials,
                                      std::uint64_t seed, const SolverLimits& limits) {
  const std::size_t n = instance.agent_count();
  const std::size_t m = instance.good_count();
  if (n < 2) throw Error(ErrorKind::precondition_violated, "agents", "monotonicity needs n >= 2");
  if (agent >= n) throw Error(ErrorKind::index_out_of_range, "agent", std::to_string(agent));

  MonotonicityReport report;
  report.agent = agent;
  MmsQuery query{agent, n, std::vector<GoodIndex>(m)};
  std::iota(query.goods.begin(), query.goods.end(), GoodIndex{0});
  MmsResult defining = maximin_share(instance, query, limits);
  report.share = defining.value;
  report.partition = defining.partition;

  auto check = [&](Bundle removed) {
    MmsQuery reduced{agent, n - 1, {}};
    std::set_difference(query.goods.begin(), query.goods.end(), removed.begin(), removed.end(),
                        std::back_inserter(reduced.goods));
    MonotonicityCheck c{std::move(removed), maximin_share(instance, reduced, limits).value, true};
    c.holds = c.reduced >= report.share;
    ++report.checks;
    if (!c.holds) {
      report.passed = false;
      report.counterexamples.push_back(std::move(c));
    }
  };

  check({});
  for (GoodIndex g = 0; g < m; ++g) check({g});

  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const Bundle& part = report.partition[std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)];
    Bundle subset;
    for (GoodIndex g : part) {
      if (rng() & 1U) subset.push_back(g);
    }
    check(std::move(subset));
  }
  return report;
}

}  // namespace fairdiv
