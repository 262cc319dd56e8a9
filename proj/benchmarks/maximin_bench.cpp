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

#include "fairdiv/gallery.hpp"
#include "fairdiv/maximin.hpp"

namespace {

using fairdiv::Rational;

std::vector<Rational> random_values(std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(1, 100);
  std::vector<Rational> v;
  for (std::size_t g = 0; g < m; ++g) v.emplace_back(dist(rng));
  return v;
}

// Args: goods, parts.
void BM_MaxMinPartition(benchmark::State& state) {
  const auto values = random_values(static_cast<std::size_t>(state.range(0)), 11);
  const auto parts = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(fairdiv::max_min_partition(values, parts));
}
BENCHMARK(BM_MaxMinPartition)->Args({8, 3})->Args({10, 4})->Args({12, 3})->Args({14, 4})->Args({16, 2});

void BM_MaxHalfSubsetSum(benchmark::State& state) {
  const auto values = random_values(static_cast<std::size_t>(state.range(0)), 12);
  for (auto _ : state) benchmark::DoNotOptimize(fairdiv::max_half_subset_sum(values));
}
BENCHMARK(BM_MaxHalfSubsetSum)->Arg(12)->Arg(20)->Arg(28)->Arg(34);

void BM_FractionalValues(benchmark::State& state) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::int64_t> num(1, 50);
  std::uniform_int_distribution<std::int64_t> den(1, 9);
  std::vector<Rational> values;
  for (int g = 0; g < 12; ++g) values.emplace_back(num(rng), den(rng));
  for (auto _ : state) benchmark::DoNotOptimize(fairdiv::max_min_partition(values, 3));
}
BENCHMARK(BM_FractionalValues);

// Few distinct values over many goods.
void BM_SylvesterShare(benchmark::State& state) {
  const auto n = static_cast<std::int64_t>(state.range(0));
  const fairdiv::Construction c = fairdiv::build("sylvester-pmms", {{"n", Rational(n)}});
  std::vector<fairdiv::GoodIndex> goods(c.instance.good_count());
  for (fairdiv::GoodIndex g = 0; g < goods.size(); ++g) goods[g] = g;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        fairdiv::maximin_share(c.instance, {0, static_cast<std::size_t>(n), goods}));
  }
}
BENCHMARK(BM_SylvesterShare)->Arg(7)->Arg(21)->Unit(benchmark::kMillisecond);

}  // namespace
