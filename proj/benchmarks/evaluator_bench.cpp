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
#include <vector>

#include <benchmark/benchmark.h>

#include "fairdiv/algorithms.hpp"
#include "fairdiv/measures.hpp"
#include "fairdiv/oracle.hpp"

namespace {

using fairdiv::Rational;

fairdiv::Instance random_instance(std::size_t n, std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(0, 9);
  std::vector<std::vector<Rational>> rows(n);
  for (auto& r : rows) {
    for (std::size_t g = 0; g < m; ++g) r.emplace_back(dist(rng));
  }
  return fairdiv::Instance::from_rows(std::move(rows));
}

// Args: agents, goods.
void BM_FullReport(benchmark::State& state) {
  const auto inst = random_instance(static_cast<std::size_t>(state.range(0)),
                                    static_cast<std::size_t>(state.range(1)), 21);
  const fairdiv::Allocation a = fairdiv::round_robin(inst);
  for (auto _ : state) benchmark::DoNotOptimize(fairdiv::full_report(inst, a));
}
BENCHMARK(BM_FullReport)->Args({3, 10})->Args({4, 12})->Args({6, 20});

// One Evaluator reused across every allocation, as the audits do.
void BM_SweepAllocations(benchmark::State& state) {
  const auto inst = random_instance(3, static_cast<std::size_t>(state.range(0)), 22);
  for (auto _ : state) {
    fairdiv::Evaluator eval(inst);
    std::uint64_t hits = 0;
    fairdiv::for_each_allocation(inst, {}, [&](std::span<const fairdiv::AgentIndex> owners) {
      if (eval.aggregates(owners, fairdiv::kAllNotionsMask)[fairdiv::Notion::efx].satisfies(Rational(1))) ++hits;
      return true;
    });
    benchmark::DoNotOptimize(hits);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(fairdiv::allocation_count(3, inst.good_count())));
}
BENCHMARK(BM_SweepAllocations)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_BestAlpha(benchmark::State& state) {
  const auto inst = random_instance(3, 6, 23);
  for (auto _ : state) benchmark::DoNotOptimize(fairdiv::best_alpha(inst, fairdiv::Notion::mms));
}
BENCHMARK(BM_BestAlpha)->Unit(benchmark::kMillisecond);

void BM_OrderedEfx(benchmark::State& state) {
  std::vector<std::vector<Rational>> rows(4);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::int64_t g = 40; g > 0; --g) rows[i].emplace_back(g * static_cast<std::int64_t>(i + 1) + static_cast<std::int64_t>(i));
  }
  const auto inst = fairdiv::Instance::from_rows(std::move(rows));
  const fairdiv::CommonOrder order = fairdiv::detect_common_order(inst);
  for (auto _ : state) benchmark::DoNotOptimize(fairdiv::ordered_efx(inst, order));
}
BENCHMARK(BM_OrderedEfx);

}  // namespace
