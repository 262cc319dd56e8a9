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

#include "fairdiv/gallery.hpp"

#include <functional>
#include <numeric>
#include <string>

#include "fairdiv/errors.hpp"

namespace fairdiv {
namespace {

using Rows = std::vector<std::vector<Rational>>;
using Builder = std::function<Construction(const Params&)>;

Rational r(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

void require(bool ok, const std::string& param, const std::string& constraint) {
  if (!ok) throw Error(ErrorKind::invalid_parameter, param, "must satisfy " + constraint);
}

std::size_t as_size(const Params& p, const std::string& name) {
  const Rational& v = p.at(name);
  return static_cast<std::size_t>(static_cast<std::int64_t>(v.numerator()));
}

// Row valuing the goods of `bundle` at 1 and everything else at 0.
std::vector<Rational> content_row(std::size_t m, const Bundle& bundle) {
  std::vector<Rational> row(m, Rational(0));
  for (GoodIndex g : bundle) row[g] = 1;
  return row;
}

std::vector<Rational> repeat(const Rational& v, std::size_t count) { return std::vector<Rational>(count, v); }

void append(std::vector<Rational>& row, const std::vector<Rational>& more) {
  row.insert(row.end(), more.begin(), more.end());
}

Bundle range(std::size_t begin, std::size_t end) {
  Bundle b(end - begin);
  std::iota(b.begin(), b.end(), begin);
  return b;
}

// Bundles of consecutive goods with the given sizes.
std::vector<Bundle> consecutive(const std::vector<std::size_t>& sizes) {
  std::vector<Bundle> out;
  std::size_t next = 0;
  for (std::size_t s : sizes) {
    out.push_back(range(next, next + s));
    next += s;
  }
  return out;
}

Rows identical(const std::vector<Rational>& row, std::size_t n) { return Rows(n, row); }

// Agent 0 values goods by `row`; every other agent is content with its bundle.
Rows focal(const std::vector<Rational>& row, const std::vector<Bundle>& bundles) {
  Rows rows{row};
  for (std::size_t a = 1; a < bundles.size(); ++a) rows.push_back(content_row(row.size(), bundles[a]));
  return rows;
}

Construction make(std::string id, const Params& params, Rows rows, std::vector<Bundle> bundles,
                  std::vector<std::pair<Notion, Ratio>> expected, std::string note = {}) {
  Instance instance = Instance::from_rows(std::move(rows), id);
  Allocation allocation(std::move(bundles), instance.good_count());
  Construction c{std::move(id), params, std::move(instance), {}, std::move(note)};
  c.scenarios.push_back(Scenario{"default", std::move(allocation), std::move(expected)});
  return c;
}

Ratio fin(const Rational& v) { return Ratio::finite(v); }

Construction build_example1(const Params& p) {
  Rows rows{{r(3), r(1), r(1), r(1), r(4)}, {r(4), r(3), r(3), r(1), r(4)}, {r(3), r(2), r(1), r(3), r(4)}};
  Instance instance(3, {"a", "b", "c", "d", "e"}, std::move(rows), "example1");
  Construction c{"example1", p, instance, {}, "allocation A is envy-free; B is EF1 and MMS but neither EFX nor PMMS"};
  c.scenarios.push_back(Scenario{"A",
                                 Allocation({{4}, {1, 2}, {0, 3}}, 5),
                                 {{Notion::ef, fin(r(1))},
                                  {Notion::ef1, fin(r(4))},
                                  {Notion::efx, fin(r(4, 3))},
                                  {Notion::mms, fin(r(4, 3))},
                                  {Notion::pmms, fin(r(1))}}});
  c.scenarios.push_back(Scenario{"B",
                                 Allocation({{0}, {1, 4}, {2, 3}}, 5),
                                 {{Notion::ef, fin(r(3, 5))},
                                  {Notion::ef1, fin(r(2))},
                                  {Notion::efx, fin(r(3, 4))},
                                  {Notion::mms, fin(r(1))},
                                  {Notion::pmms, fin(r(3, 4))}}});
  return c;
}

Construction build_prop1(const Params& p) {
  const Rational& alpha = p.at("alpha");
  const Rational& V = p.at("V");
  const std::size_t n = as_size(p, "n");
  const std::size_t m = n + 1;
  std::vector<Rational> row{V, r(1), alpha};
  append(row, repeat(r(0), n - 2));
  std::vector<Bundle> bundles{{0, 1}, {2}};
  for (std::size_t d = 2; d < n; ++d) bundles.push_back({d + 1});
  Rows rows = identical(row, 2);
  for (std::size_t d = 2; d < n; ++d) rows.push_back(content_row(m, bundles[d]));
  return make("prop1-ef1-not-efx", p, std::move(rows), std::move(bundles),
              {{Notion::ef1, fin(alpha)}, {Notion::efx, fin(alpha / V)}},
              "the EFX ratio is alpha/V, which is 1/V at alpha = 1");
}

Construction build_prop2(const Params& p) {
  const std::size_t n = as_size(p, "n");
  std::vector<Rational> row{r(2), r(2), r(1), r(1)};
  append(row, repeat(r(3), n - 2));
  std::vector<std::size_t> sizes{2, 2};
  sizes.resize(n, 1);
  return make("prop2-tight", p, identical(row, n), consecutive(sizes),
              {{Notion::efx, fin(r(1))}, {Notion::mms, fin(r(2, 3))}});
}

Construction build_prop3(const Params& p) {
  const std::size_t n = as_size(p, "n");
  std::vector<Rational> row = repeat(r(1, 8), 4);
  append(row, repeat(r(1, 2), 4));
  append(row, repeat(r(1), 4 + 2 * (n - 4)));
  std::vector<std::size_t> sizes{5, 3};
  sizes.resize(n, 2);
  return make("prop3-8-13", p, identical(row, n), consecutive(sizes),
              {{Notion::efx, fin(r(1))}, {Notion::mms, fin(r(8, 13))}},
              "mu = 13/8 for every agent; the own bundle of agent 1 is worth 1");
}

Construction build_prop4_2(const Params& p) {
  const Rational& alpha = p.at("alpha");
  std::vector<Rational> row{r(1), r(1), alpha / r(2), alpha / r(2)};
  return make("prop4-2agent", p, identical(row, 2), consecutive({2, 2}),
              {{Notion::efx, fin(alpha)}, {Notion::mms, fin(r(2) * alpha / (r(2) + alpha))}});
}

Construction build_prop4_4(const Params& p) {
  const Rational& alpha = p.at("alpha");
  const std::size_t k = as_size(p, "k");
  std::vector<Rational> row = repeat(alpha / Rational(static_cast<std::int64_t>(k)), k);
  append(row, repeat(r(1, 2), 3));
  append(row, repeat(r(1), 4));
  std::vector<std::pair<Notion, Ratio>> expected{{Notion::efx, fin(alpha)}};
  std::string note;
  if (alpha < r(1, 2)) {
    expected.emplace_back(Notion::mms, fin(alpha / (r(1) + alpha)));
  } else if ((Rational(static_cast<std::int64_t>(k)) * (alpha - r(1, 2)) / (r(4) * alpha)).is_integer()) {
    expected.emplace_back(Notion::mms, fin(r(8) * alpha / (r(11) + r(2) * alpha)));
  } else {
    note = "the small goods cannot be split evenly at this k, so mms is left to the solver";
  }
  return make("prop4-4agent", p, identical(row, 4), consecutive({k, 3, 2, 2}), std::move(expected),
              std::move(note));
}

Construction build_prop5(const Params& p) {
  const Rational& alpha = p.at("alpha");
  const Rational& V = p.at("V");
  const std::size_t n = as_size(p, "n");
  std::vector<Rational> row{alpha};
  for (std::size_t k = 1; k < n; ++k) append(row, {alpha, r(1) - alpha, V});
  std::vector<std::size_t> sizes{1};
  sizes.resize(n, 3);
  const Rational nn(static_cast<std::int64_t>(n));
  return make("prop5-tight", p, identical(row, n), consecutive(sizes),
              {{Notion::ef1, fin(alpha)}, {Notion::mms, fin(alpha / (nn - r(1) + alpha))}});
}

Construction build_prop6(const Params& p) {
  const Rational& alpha = p.at("alpha");
  const std::size_t n = as_size(p, "n");
  std::vector<Rational> row{alpha / r(2), alpha / r(2)};
  append(row, repeat(r(1), 2 * n - 2));
  return make("prop6-tight", p, identical(row, n), consecutive(std::vector<std::size_t>(n, 2)),
              {{Notion::efx, fin(alpha)}, {Notion::pmms, fin(r(2) * alpha / (r(2) + alpha))}});
}

Construction build_prop7(const Params& p) {
  const Rational& alpha = p.at("alpha");
  const Rational& V = p.at("V");
  const std::size_t n = as_size(p, "n");
  std::vector<Rational> row{alpha, r(1), V};
  append(row, repeat(alpha, n - 2));
  std::vector<std::size_t> sizes{1, 2};
  sizes.resize(n, 1);
  auto bundles = consecutive(sizes);
  return make("prop7-tight", p, focal(row, bundles), bundles,
              {{Notion::ef1, fin(alpha)}, {Notion::pmms, fin(alpha / (r(1) + alpha))}},
              "goods g4 onwards are the singleton bundles of agents 3 to n");
}

Construction build_prop9(const Params& p) {
  const std::size_t n = as_size(p, "n");
  std::vector<Rational> row = repeat(r(1, 2), 3);
  append(row, repeat(r(1), 3 + 2 * (n - 3)));
  std::vector<Bundle> bundles{{3}, {0, 1, 2}, {4, 5}};
  for (std::size_t a = 3; a < n; ++a) bundles.push_back({2 * a, 2 * a + 1});
  return make("prop9-2-3", p, focal(row, bundles), bundles,
              {{Notion::pmms, fin(r(1))}, {Notion::mms, fin(r(2, 3))}}, "mu = 3/2 for agent 1");
}

Construction build_sylvester(const Params& p) {
  const std::size_t n = as_size(p, "n");
  struct Level {
    std::size_t size;
    Rational value;
  };
  const std::vector<Level> levels{{3, r(1, 2)}, {7, r(1, 6)}, {43, r(1, 42)}, {1807, r(1, 1806)}};

  std::vector<Rational> row{r(1)};
  std::vector<std::size_t> sizes{1};
  std::size_t used = 1;
  Rational share = 1;
  bool balanced = true;
  for (const auto& level : levels) {
    const std::size_t agents = n / level.size;
    for (std::size_t a = 0; a < agents; ++a) {
      append(row, repeat(level.value, level.size));
      sizes.push_back(level.size);
    }
    used += agents;
    if (agents > 0) {
      share += level.value;
      balanced = balanced && agents * level.size == n;
    }
  }
  require(used <= n, "n", "enough agents for every level");
  const std::size_t pairs = n - used;
  for (std::size_t a = 0; a < pairs; ++a) {
    append(row, repeat(r(1), 2));
    sizes.push_back(2);
  }
  balanced = balanced && 1 + 2 * pairs == n;
  auto bundles = consecutive(sizes);
  std::vector<std::pair<Notion, Ratio>> expected{{Notion::pmms, fin(r(1))}};
  std::string note = "agent 1 holds one good of value 1";
  if (balanced) {
    expected.emplace_back(Notion::mms, fin(r(1) / share));
    note += "; every value level has exactly n goods, so mu = " + share.to_string();
  }
  return make("sylvester-pmms", p, focal(row, bundles), bundles, std::move(expected), std::move(note));
}

Construction build_prop10(const Params& p) {
  const Rational& alpha = p.at("alpha");
  const Rational& V = p.at("V");
  const std::size_t n = as_size(p, "n");
  std::vector<Rational> row{alpha};
  for (std::size_t k = 1; k < n; ++k) append(row, {r(1) - alpha, V});
  std::vector<std::size_t> sizes{1};
  sizes.resize(n, 2);
  auto bundles = consecutive(sizes);
  const Rational nn(static_cast<std::int64_t>(n));
  return make("prop10-tight", p, focal(row, bundles), bundles,
              {{Notion::pmms, fin(alpha)}, {Notion::mms, fin(alpha / (nn - r(1) - alpha * (nn - r(2))))}});
}

Construction prop11_instance(std::string id, const Params& p, std::vector<std::pair<Notion, Ratio>> expected) {
  const Rational& eps = p.at("eps");
  const std::size_t n = as_size(p, "n");
  std::vector<Rational> row{eps};
  append(row, repeat(r(1), n - 1));
  append(row, repeat(r(0), n - 2));
  std::vector<std::size_t> sizes{1, n - 1};
  sizes.resize(n, 1);
  auto bundles = consecutive(sizes);
  return make(std::move(id), p, focal(row, bundles), bundles, std::move(expected), "mu_1 = eps");
}

Construction build_prop11(const Params& p) {
  const Rational& eps = p.at("eps");
  const std::size_t n = as_size(p, "n");
  Rational base(static_cast<std::int64_t>((n - 1) / 2));
  if ((n - 1) % 2 == 1) base += eps;
  return prop11_instance("prop11-mms-not-pmms", p, {{Notion::mms, fin(r(1))}, {Notion::pmms, fin(eps / base)}});
}

Construction build_prop13(const Params& p) {
  const Rational& eps = p.at("eps");
  const std::size_t n = as_size(p, "n");
  return prop11_instance("prop13-mms-not-ef1", p,
                         {{Notion::mms, fin(r(1))},
                          {Notion::ef1, fin(eps / Rational(static_cast<std::int64_t>(n - 2)))}});
}

Construction build_prop12(const Params& p) {
  const Rational& alpha = p.at("alpha");
  const Rational& eps = p.at("eps");
  const std::size_t k = as_size(p, "k");
  const Rational kk(static_cast<std::int64_t>(k));
  std::vector<Rational> row = repeat(alpha / kk, k);
  append(row, repeat((r(2) - alpha) / kk, k));
  row.push_back(eps);
  auto bundles = consecutive({k, k + 1});
  std::vector<std::pair<Notion, Ratio>> expected{
      {Notion::ef1, fin(alpha / ((r(2) - alpha) * (r(1) - r(1) / kk) + eps))}};
  // With k even, half of each kind of small good sums to exactly 1. Every
  // other subset sum is a multiple of 1/(qk) (q the denominator of alpha),
  // possibly plus eps, so for eps < 1/(qk) none lands in (1, 1 + eps/2].
  if (k % 2 == 0 && eps * Rational(alpha.denominator()) * kk < r(1)) {
    expected.emplace_back(Notion::pmms, fin(alpha));
  }
  return make("prop12-tight", p, focal(row, bundles), bundles, std::move(expected),
              "ef1 tends to alpha/(2-alpha) as k grows and eps shrinks");
}

Construction build_prop14(const Params& p) {
  const Rational& alpha = p.at("alpha");
  const Rational& V = p.at("V");
  const std::size_t n = as_size(p, "n");
  std::vector<Rational> row{V, r(1) / alpha - r(1)};
  append(row, repeat(r(1), n - 1));
  std::vector<std::size_t> sizes{2};
  sizes.resize(n, 1);
  return make("prop14-pmms-not-efx", p, identical(row, n), consecutive(sizes),
              {{Notion::pmms, fin(alpha)}, {Notion::efx, fin(r(1) / V)}});
}

ParamSpec integer_param(std::string name, std::int64_t def, std::string domain) {
  return ParamSpec{std::move(name), Rational(def), true, std::move(domain)};
}
ParamSpec rational_param(std::string name, Rational def, std::string domain) {
  return ParamSpec{std::move(name), std::move(def), false, std::move(domain)};
}

// Domain checks run after defaults are filled in and integrality is checked.
using Validator = std::function<void(const Params&)>;

struct Definition {
  GalleryEntry entry;
  Validator validate;
  Builder build;
};

bool in_unit(const Rational& a) { return a > r(0) && a <= r(1); }
bool in_open_unit(const Rational& a) { return a > r(0) && a < r(1); }

std::vector<Definition> definitions() {
  std::vector<Definition> d;
  const auto alpha_closed = rational_param("alpha", r(1, 2), "0 < alpha <= 1");
  const auto check_alpha = [](const Params& p) { require(in_unit(p.at("alpha")), "alpha", "0 < alpha <= 1"); };

  d.push_back({{"example1", "three agents, five goods; allocations A and B", {}, std::nullopt, std::nullopt},
               [](const Params&) {},
               build_example1});
  d.push_back({{"prop1-ef1-not-efx",
                "EF1 allocation whose EFX ratio vanishes as V grows",
                {rational_param("alpha", r(1), "0 < alpha <= 1"), rational_param("V", r(1000), "V >= 1"),
                 integer_param("n", 2, "n >= 2")},
                std::nullopt,
                std::nullopt},
               [&](const Params& p) {
                 check_alpha(p);
                 require(p.at("V") >= r(1), "V", "V >= 1");
                 require(p.at("n") >= r(2), "n", "n >= 2");
               },
               build_prop1});
  d.push_back({{"prop2-tight", "EFX allocation at exactly 2/3 of the maximin share",
                {integer_param("n", 2, "n >= 2")}, "prop2", Notion::mms},
               [](const Params& p) { require(p.at("n") >= r(2), "n", "n >= 2"); },
               build_prop2});
  d.push_back({{"prop3-8-13", "EFX allocation at 8/13 of the maximin share",
                {integer_param("n", 4, "n >= 4")}, std::nullopt, std::nullopt},
               [](const Params& p) { require(p.at("n") >= r(4), "n", "n >= 4"); },
               build_prop3});
  d.push_back({{"prop4-2agent", "alpha-EFX allocation at 2 alpha/(2 + alpha) of the maximin share",
                {alpha_closed}, "prop4", Notion::mms},
               check_alpha,
               build_prop4_2});
  d.push_back({{"prop4-4agent", "alpha-EFX allocation among four identical agents",
                {alpha_closed, integer_param("k", 24, "k >= 1")}, std::nullopt, std::nullopt},
               [&](const Params& p) {
                 check_alpha(p);
                 require(p.at("k") >= r(1), "k", "k >= 1");
               },
               build_prop4_4});
  d.push_back({{"prop5-tight", "alpha-EF1 allocation at alpha/(n - 1 + alpha) of the maximin share",
                {integer_param("n", 3, "n >= 2"), alpha_closed, rational_param("V", r(1000), "V >= n - 1 + alpha")},
                "prop5", Notion::mms},
               [&](const Params& p) {
                 check_alpha(p);
                 require(p.at("n") >= r(2), "n", "n >= 2");
                 require(p.at("V") >= p.at("n") - r(1) + p.at("alpha"), "V", "V >= n - 1 + alpha");
               },
               build_prop5});
  d.push_back({{"prop6-tight", "alpha-EFX allocation at 2 alpha/(2 + alpha) of the pairwise maximin share",
                {integer_param("n", 2, "n >= 2"), alpha_closed}, "prop6", Notion::pmms},
               [&](const Params& p) {
                 check_alpha(p);
                 require(p.at("n") >= r(2), "n", "n >= 2");
               },
               build_prop6});
  d.push_back({{"prop7-tight", "alpha-EF1 allocation at alpha/(1 + alpha) of the pairwise maximin share",
                {integer_param("n", 3, "n >= 3"), alpha_closed, rational_param("V", r(1000), "V >= 1 + alpha")},
                "prop7", Notion::pmms},
               [&](const Params& p) {
                 check_alpha(p);
                 require(p.at("n") >= r(3), "n", "n >= 3");
                 require(p.at("V") >= r(1) + p.at("alpha"), "V", "V >= 1 + alpha");
               },
               build_prop7});
  d.push_back({{"prop9-2-3", "PMMS allocation at 2/3 of the maximin share", {integer_param("n", 3, "n >= 3")},
                "cor9", Notion::mms},
               [](const Params& p) { require(p.at("n") >= r(3), "n", "n >= 3"); },
               build_prop9});
  d.push_back({{"sylvester-pmms", "PMMS allocation built from the levels 1, 1/2, 1/6, 1/42, 1/1806",
                {integer_param("n", 21, "3 <= n <= 1806")}, std::nullopt, std::nullopt},
               [](const Params& p) {
                 require(p.at("n") >= r(3) && p.at("n") <= r(1806), "n", "3 <= n <= 1806");
               },
               build_sylvester});
  d.push_back({{"prop10-tight", "alpha-PMMS allocation at alpha/(n - 1 - alpha(n - 2)) of the maximin share",
                {integer_param("n", 3, "n >= 3"), alpha_closed,
                 rational_param("V", r(1000), "V >= n - 1 - alpha(n - 2)")},
                std::nullopt, std::nullopt},
               [&](const Params& p) {
                 check_alpha(p);
                 require(p.at("n") >= r(3), "n", "n >= 3");
                 const Rational& n = p.at("n");
                 require(p.at("V") >= n - r(1) - p.at("alpha") * (n - r(2)), "V", "V >= n - 1 - alpha(n - 2)");
               },
               build_prop10});
  const auto eps_param = rational_param("eps", r(1, 1000), "0 < eps < 1");
  const auto check_eps = [](const Params& p) { require(in_open_unit(p.at("eps")), "eps", "0 < eps < 1"); };
  d.push_back({{"prop11-mms-not-pmms", "MMS allocation with pairwise ratio at most eps",
                {integer_param("n", 3, "n >= 3"), eps_param}, std::nullopt, std::nullopt},
               [&](const Params& p) {
                 check_eps(p);
                 require(p.at("n") >= r(3), "n", "n >= 3");
               },
               build_prop11});
  d.push_back({{"prop12-tight", "alpha-PMMS allocation with EF1 ratio near alpha/(2 - alpha)",
                {integer_param("k", 4, "k >= 2"), rational_param("alpha", r(1, 2), "0 < alpha < 1"),
                 rational_param("eps", r(1, 1000), "eps > 0")},
                std::nullopt, std::nullopt},
               [](const Params& p) {
                 require(in_open_unit(p.at("alpha")), "alpha", "0 < alpha < 1");
                 require(p.at("k") >= r(2), "k", "k >= 2");
                 require(p.at("eps") > r(0), "eps", "eps > 0");
               },
               build_prop12});
  d.push_back({{"prop13-mms-not-ef1", "MMS allocation with EF1 ratio eps/(n - 2)",
                {integer_param("n", 3, "n >= 3"), eps_param}, std::nullopt, std::nullopt},
               [&](const Params& p) {
                 check_eps(p);
                 require(p.at("n") >= r(3), "n", "n >= 3");
               },
               build_prop13});
  d.push_back({{"prop14-pmms-not-efx", "alpha-PMMS allocation with EFX ratio 1/V",
                {integer_param("n", 2, "n >= 2"), rational_param("alpha", r(1, 2), "0 < alpha < 1"),
                 rational_param("V", r(1000), "V >= 1/alpha")},
                std::nullopt, std::nullopt},
               [](const Params& p) {
                 require(in_open_unit(p.at("alpha")), "alpha", "0 < alpha < 1");
                 require(p.at("n") >= r(2), "n", "n >= 2");
                 require(p.at("V") >= r(1) / p.at("alpha"), "V", "V >= 1/alpha");
               },
               build_prop14});
  return d;
}

const std::vector<Definition>& registry() {
  static const std::vector<Definition> defs = definitions();
  return defs;
}

}  // namespace

const std::vector<GalleryEntry>& list_entries() {
  static const std::vector<GalleryEntry> entries = [] {
    std::vector<GalleryEntry> out;
    for (const auto& d : registry()) out.push_back(d.entry);
    return out;
  }();
  return entries;
}

const GalleryEntry* find_entry(std::string_view id) {
  for (const auto& e : list_entries()) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

Construction build(std::string_view id, const Params& params) {
  const Definition* def = nullptr;
  for (const auto& d : registry()) {
    if (d.entry.id == id) def = &d;
  }
  if (def == nullptr) throw Error(ErrorKind::unknown_entry, "id", "no gallery entry '" + std::string(id) + "'");

  Params resolved;
  for (const auto& spec : def->entry.params) resolved[spec.name] = spec.default_value;
  for (const auto& [name, value] : params) {
    auto it = resolved.find(name);
    if (it == resolved.end()) {
      throw Error(ErrorKind::invalid_parameter, name, "entry '" + std::string(id) + "' has no such parameter");
    }
    it->second = value;
  }
  for (const auto& spec : def->entry.params) {
    const Rational& v = resolved.at(spec.name);
    if (spec.integer) require(v.is_integer(), spec.name, "an integer with " + spec.domain);
    if (spec.integer) require(v <= r(100000), spec.name, spec.name + " <= 100000");
  }
  def->validate(resolved);
  return def->build(resolved);
}

Json to_json(const GalleryEntry& entry) {
  Json doc = Json::object();
  doc["id"] = entry.id;
  doc["summary"] = entry.summary;
  Json params = Json::array();
  for (const auto& p : entry.params) {
    params.push_back({{"name", p.name},
                      {"default", p.default_value.to_string()},
                      {"integer", p.integer},
                      {"domain", p.domain}});
  }
  doc["params"] = std::move(params);
  if (entry.tight_rule) doc["tight_rule"] = *entry.tight_rule;
  if (entry.tight_notion) doc["tight_notion"] = std::string(to_string(*entry.tight_notion));
  return doc;
}

Json expected_to_json(const Scenario& scenario) {
  Json doc = Json::object();
  for (const auto& [notion, ratio] : scenario.expected) doc[std::string(to_string(notion))] = ratio.to_string();
  return doc;
}

}  // namespace fairdiv
