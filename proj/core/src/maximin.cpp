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

#include "fairdiv/maximin.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <unordered_set>
#include <utility>

#include "fairdiv/errors.hpp"

namespace fairdiv {
namespace {

// Totals below this bound are handled with 64-bit arithmetic.
constexpr std::int64_t kFastTotalLimit = std::int64_t{1} << 62;

// The positive values of a value list, scaled by a common factor so that every
// value is an integer. `positions[k]` is the index of scaled value k in the
// original list.
template <class Int>
struct ScaledValues {
  std::vector<Int> values;
  std::vector<std::size_t> positions;
  Int total{};
};

struct Scaling {
  std::vector<std::size_t> positions;
  std::vector<Rational> positives;
  BigInt scale = 1;
};

Scaling collect_positive(std::span<const Rational> values) {
  Scaling out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k].sign() > 0) {
      out.positions.push_back(k);
      out.positives.push_back(values[k]);
    }
  }
  // Common denominator; inline denominators are combined in 128 bits first.
  unsigned __int128 small_lcm = 1;
  bool small = true;
  for (const auto& v : out.positives) {
    if (!v.is_inline()) {
      small = false;
      break;
    }
    const auto d = static_cast<std::uint64_t>(v.denominator());
    const std::uint64_t g = std::gcd(static_cast<std::uint64_t>(small_lcm % d), d);
    small_lcm = small_lcm / g * d;
    if (small_lcm > static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max())) {
      small = false;
      break;
    }
  }
  if (small) {
    out.scale = BigInt(static_cast<std::uint64_t>(small_lcm));
  } else {
    BigInt l = 1;
    for (const auto& v : out.positives) l = boost::multiprecision::lcm(l, v.denominator());
    out.scale = l;
  }
  return out;
}

std::optional<ScaledValues<std::int64_t>> scale_fast(const Scaling& s) {
  if (s.scale > BigInt(kFastTotalLimit)) return std::nullopt;
  const auto scale = static_cast<std::int64_t>(s.scale);
  ScaledValues<std::int64_t> out;
  out.positions = s.positions;
  __int128 total = 0;
  for (const auto& v : s.positives) {
    if (!v.is_inline()) return std::nullopt;
    const auto num = static_cast<std::int64_t>(v.numerator());
    const auto den = static_cast<std::int64_t>(v.denominator());
    const __int128 scaled = static_cast<__int128>(num) * (scale / den);
    total += scaled;
    if (total > kFastTotalLimit) return std::nullopt;
    out.values.push_back(static_cast<std::int64_t>(scaled));
  }
  out.total = static_cast<std::int64_t>(total);
  return out;
}

ScaledValues<BigInt> scale_big(const Scaling& s) {
  ScaledValues<BigInt> out;
  out.positions = s.positions;
  out.total = 0;
  for (const auto& v : s.positives) {
    BigInt scaled = v.numerator() * (s.scale / v.denominator());
    out.total += scaled;
    out.values.push_back(std::move(scaled));
  }
  return out;
}

template <class Int>
Rational unscale(const Int& value, const BigInt& scale) {
  return Rational(BigInt(value), scale);
}

// Packing search over value types: can `parts` disjoint bundles, each worth at
// least a threshold, be drawn from the multiset? Types are sorted by strictly
// decreasing value.
template <class Int>
class PackingSearch {
 public:
  PackingSearch(std::vector<Int> type_values, std::vector<std::size_t> counts, std::size_t parts)
      : values_(std::move(type_values)), initial_(std::move(counts)), parts_(parts) {
    radix_.resize(values_.size());
    std::uint64_t r = 1;
    for (std::size_t t = 0; t < values_.size(); ++t) {
      radix_[t] = r;
      r *= initial_[t] + 1;
    }
    initial_code_ = r - 1;
    total_ = Int{0};
    for (std::size_t t = 0; t < values_.size(); ++t) total_ += values_[t] * static_cast<Int>(initial_[t]);
  }

  bool feasible(const Int& threshold) { return run(threshold, nullptr); }

  /// Count vectors of parts - 1 bundles; the remaining goods form the last part.
  std::vector<std::vector<std::size_t>> packing(const Int& threshold) {
    std::vector<std::vector<std::size_t>> path;
    if (!run(threshold, &path)) return {};
    return path;
  }

 private:
  bool run(const Int& threshold, std::vector<std::vector<std::size_t>>* path) {
    threshold_ = threshold;
    failed_.clear();
    path_ = path;
    if (threshold_ <= Int{0}) {
      if (path_) path_->assign(parts_ - 1, std::vector<std::size_t>(values_.size(), 0));
      return true;
    }
    counts_ = initial_;
    return search(initial_code_, parts_, total_);
  }

  bool search(std::uint64_t code, std::size_t parts_left, const Int& remaining) {
    if (parts_left == 1) return remaining >= threshold_;
    if (remaining < threshold_ * static_cast<Int>(parts_left)) return false;
    const std::uint64_t key = code * (parts_ + 1) + parts_left;
    if (failed_.contains(key)) return false;

    std::size_t first = 0;
    while (counts_[first] == 0) ++first;
    std::vector<std::size_t> bundle(values_.size(), 0);
    const bool ok = extend(first, first, Int{0}, bundle, code, parts_left, remaining);
    if (!ok) failed_.insert(key);
    return ok;
  }

  // Chooses how many goods of type t join the bundle. Only minimal bundles
  // (dropping their least valuable good falls below the threshold) containing
  // a good of the most valuable remaining type are generated: any feasible
  // packing can be rewritten into one that starts with such a bundle.
  bool extend(std::size_t t, std::size_t first, const Int& sum, std::vector<std::size_t>& bundle,
              std::uint64_t code, std::size_t parts_left, const Int& remaining) {
    if (t == values_.size()) return false;
    Int reachable = sum;
    for (std::size_t u = t; u < values_.size(); ++u) reachable += values_[u] * static_cast<Int>(counts_[u]);
    if (reachable < threshold_) return false;

    const Int gap = threshold_ - sum;
    const Int needed = (gap + values_[t] - Int{1}) / values_[t];
    const std::size_t upper = needed < static_cast<Int>(counts_[t])
                                  ? static_cast<std::size_t>(needed)
                                  : counts_[t];
    const std::size_t lower = t == first ? 1 : 0;
    for (std::size_t b = upper + 1; b-- > lower;) {
      const Int s = sum + values_[t] * static_cast<Int>(b);
      bundle[t] = b;
      if (s >= threshold_) {
        if (take(bundle, t, code, parts_left, remaining - s)) return true;
      } else if (extend(t + 1, first, s, bundle, code, parts_left, remaining)) {
        return true;
      }
    }
    bundle[t] = 0;
    return false;
  }

  bool take(const std::vector<std::size_t>& bundle, std::size_t last, std::uint64_t code,
            std::size_t parts_left, const Int& remaining) {
    std::uint64_t next = code;
    for (std::size_t u = 0; u <= last; ++u) {
      counts_[u] -= bundle[u];
      next -= bundle[u] * radix_[u];
    }
    const bool ok = search(next, parts_left - 1, remaining);
    for (std::size_t u = 0; u <= last; ++u) counts_[u] += bundle[u];
    if (ok && path_) {
      std::vector<std::size_t> chosen(values_.size(), 0);
      std::copy(bundle.begin(), bundle.begin() + static_cast<std::ptrdiff_t>(last + 1), chosen.begin());
      path_->insert(path_->begin(), std::move(chosen));
    }
    return ok;
  }

  std::vector<Int> values_;
  std::vector<std::size_t> initial_;
  std::size_t parts_;
  std::vector<std::uint64_t> radix_;
  std::uint64_t initial_code_ = 0;
  Int total_{};

  Int threshold_{};
  std::vector<std::size_t> counts_;
  std::unordered_set<std::uint64_t> failed_;
  std::vector<std::vector<std::size_t>>* path_ = nullptr;
};

template <class Int>
MmsResult solve_typed(const ScaledValues<Int>& scaled, const BigInt& scale, std::size_t parts,
                      std::size_t value_count, const SolverLimits& limits) {
  // Group equal values into types, most valuable first.
  std::vector<std::size_t> order(scaled.values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scaled.values[a] > scaled.values[b]; });
  std::vector<Int> type_values;
  std::vector<std::vector<std::size_t>> members;  // original positions per type
  for (std::size_t k : order) {
    if (type_values.empty() || type_values.back() != scaled.values[k]) {
      type_values.push_back(scaled.values[k]);
      members.emplace_back();
    }
    members.back().push_back(scaled.positions[k]);
  }
  std::vector<std::size_t> counts;
  BigInt states = 1;
  for (const auto& m : members) {
    counts.push_back(m.size());
    states *= m.size() + 1;
  }
  if (states > (BigInt(1) << limits.mms_log2_states)) {
    throw Error(ErrorKind::size_limit_exceeded, "goods",
                "max-min partition state space " + states.str() + " exceeds 2^" +
                    std::to_string(limits.mms_log2_states));
  }

  // Candidate thresholds: distinct bundle sums no larger than total / parts.
  std::vector<Int> candidates{Int{0}};
  for (std::size_t t = 0; t < type_values.size(); ++t) {
    const std::size_t existing = candidates.size();
    for (std::size_t c = 1; c <= counts[t]; ++c) {
      const Int add = type_values[t] * static_cast<Int>(c);
      for (std::size_t k = 0; k < existing; ++k) {
        Int s = candidates[k] + add;
        if (s * static_cast<Int>(parts) <= scaled.total) candidates.push_back(std::move(s));
      }
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  PackingSearch<Int> search(type_values, counts, parts);
  std::size_t lo = 0;
  std::size_t hi = candidates.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    if (search.feasible(candidates[mid])) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  const Int& best = candidates[lo];

  MmsResult result;
  result.value = unscale(best, scale);
  result.partition.assign(parts, Bundle{});
  std::vector<std::size_t> cursor(type_values.size(), 0);
  const auto bundles = search.packing(best);
  for (std::size_t p = 0; p < bundles.size(); ++p) {
    for (std::size_t t = 0; t < type_values.size(); ++t) {
      for (std::size_t c = 0; c < bundles[p][t]; ++c) result.partition[p].push_back(members[t][cursor[t]++]);
    }
  }
  auto& last = result.partition.back();
  for (std::size_t t = 0; t < type_values.size(); ++t) {
    while (cursor[t] < members[t].size()) last.push_back(members[t][cursor[t]++]);
  }
  std::vector<bool> used(value_count, false);
  for (std::size_t k : scaled.positions) used[k] = true;
  for (std::size_t k = 0; k < value_count; ++k) {
    if (!used[k]) last.push_back(k);
  }
  for (auto& bundle : result.partition) std::sort(bundle.begin(), bundle.end());
  return result;
}

template <class Int>
Int max_half_subset_sum_scaled(const std::vector<Int>& values, const Int& total) {
  const std::size_t half_count = values.size() / 2;
  auto sums_of = [&](std::size_t begin, std::size_t end) {
    std::vector<Int> sums{Int{0}};
    for (std::size_t k = begin; k < end; ++k) {
      const std::size_t existing = sums.size();
      for (std::size_t j = 0; j < existing; ++j) sums.push_back(sums[j] + values[k]);
    }
    return sums;
  };
  const std::vector<Int> left = sums_of(0, half_count);
  std::vector<Int> right = sums_of(half_count, values.size());
  std::sort(right.begin(), right.end());
  const Int cap = total / Int{2};
  Int best{0};
  for (const Int& a : left) {
    if (a > cap) continue;
    const Int room = cap - a;
    auto it = std::upper_bound(right.begin(), right.end(), room);
    // right.front() == 0, so `it` never equals begin().
    const Int candidate = a + *std::prev(it);
    if (candidate > best) best = candidate;
  }
  return best;
}

}  // namespace

MmsResult max_min_partition(std::span<const Rational> values, std::size_t parts,
                            const SolverLimits& limits) {
  if (parts == 0) throw Error(ErrorKind::invalid_parameter, "parts", "must be at least 1");
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k].sign() < 0) throw Error(ErrorKind::negative_valuation, "values", std::to_string(k));
  }
  MmsResult result;
  if (parts == 1) {
    Bundle all(values.size());
    std::iota(all.begin(), all.end(), 0);
    for (const auto& v : values) result.value += v;
    result.partition.push_back(std::move(all));
    return result;
  }
  const Scaling scaling = collect_positive(values);
  if (scaling.positions.size() < parts) {
    // Some part necessarily holds no positively valued good.
    result.value = Rational(0);
    result.partition.assign(parts, Bundle{});
    for (std::size_t k = 0; k < scaling.positions.size(); ++k) {
      result.partition[k].push_back(scaling.positions[k]);
    }
    std::vector<bool> used(values.size(), false);
    for (std::size_t k : scaling.positions) used[k] = true;
    for (std::size_t k = 0; k < values.size(); ++k) {
      if (!used[k]) result.partition.back().push_back(k);
    }
    for (auto& bundle : result.partition) std::sort(bundle.begin(), bundle.end());
    return result;
  }
  if (auto fast = scale_fast(scaling)) {
    return solve_typed(*fast, scaling.scale, parts, values.size(), limits);
  }
  return solve_typed(scale_big(scaling), scaling.scale, parts, values.size(), limits);
}

MmsResult maximin_share(const Instance& instance, const MmsQuery& query, const SolverLimits& limits) {
  if (query.parts == 0) throw Error(ErrorKind::invalid_parameter, "parts", "must be at least 1");
  const auto row = instance.row(query.agent);
  std::vector<Rational> values;
  values.reserve(query.goods.size());
  for (GoodIndex g : query.goods) {
    if (g >= row.size()) throw Error(ErrorKind::index_out_of_range, "goods", std::to_string(g));
    values.push_back(row[g]);
  }
  MmsResult result = max_min_partition(values, query.parts, limits);
  for (auto& bundle : result.partition) {
    for (auto& k : bundle) k = query.goods[k];
    std::sort(bundle.begin(), bundle.end());
  }
  return result;
}

Rational max_half_subset_sum(std::span<const Rational> values, const SolverLimits& limits) {
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k].sign() < 0) throw Error(ErrorKind::negative_valuation, "values", std::to_string(k));
  }
  const Scaling scaling = collect_positive(values);
  if (scaling.positions.size() > limits.pairwise_goods) {
    // Too many goods to split in halves; the typed solver still copes when
    // values repeat, and throws size_limit_exceeded otherwise.
    return max_min_partition(values, 2, limits).value;
  }
  if (scaling.positions.empty()) return Rational(0);
  if (auto fast = scale_fast(scaling)) {
    return unscale(max_half_subset_sum_scaled(fast->values, fast->total), scaling.scale);
  }
  const auto big = scale_big(scaling);
  return unscale(max_half_subset_sum_scaled(big.values, big.total), scaling.scale);
}

Rational pairwise_base(const Instance& instance, AgentIndex agent, std::span<const GoodIndex> union_goods,
                       const SolverLimits& limits) {
  const auto row = instance.row(agent);
  std::vector<Rational> values;
  values.reserve(union_goods.size());
  for (GoodIndex g : union_goods) {
    if (g >= row.size()) throw Error(ErrorKind::index_out_of_range, "goods", std::to_string(g));
    values.push_back(row[g]);
  }
  return max_half_subset_sum(values, limits);
}

}  // namespace fairdiv
