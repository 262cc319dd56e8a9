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

#include "fairdiv/measures.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <iterator>
#include <numeric>
#include <string>

#include "fairdiv/errors.hpp"

namespace fairdiv {
namespace {

constexpr std::size_t kDenseBaseGoods = 12;
constexpr std::size_t kMaskGoods = 64;

void check_pair(const Instance& instance, AgentIndex i, AgentIndex j, const Allocation& allocation) {
  allocation.check_against(instance);
  if (i >= instance.agent_count() || j >= instance.agent_count()) {
    throw Error(ErrorKind::index_out_of_range, "agent", std::to_string(std::max(i, j)));
  }
  if (i == j) throw Error(ErrorKind::precondition_violated, "agent", "pair ratios need i != j");
}

}  // namespace

std::string_view to_string(Notion notion) {
  switch (notion) {
    case Notion::ef: return "ef";
    case Notion::ef1: return "ef1";
    case Notion::efx: return "efx";
    case Notion::mms: return "mms";
    case Notion::pmms: return "pmms";
  }
  return "?";
}

std::optional<Notion> parse_notion(std::string_view text) {
  std::string lower;
  std::transform(text.begin(), text.end(), std::back_inserter(lower),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (Notion n : kAllNotions) {
    if (lower == to_string(n)) return n;
  }
  return std::nullopt;
}

Ratio ef_ratio_pair(const Instance& instance, AgentIndex i, AgentIndex j, const Allocation& allocation) {
  check_pair(instance, i, j, allocation);
  return Ratio::quotient(bundle_value(instance, i, allocation.bundle(i)),
                         bundle_value(instance, i, allocation.bundle(j)));
}

Ratio ef1_ratio_pair(const Instance& instance, AgentIndex i, AgentIndex j, const Allocation& allocation) {
  check_pair(instance, i, j, allocation);
  const Bundle& other = allocation.bundle(j);
  if (other.empty()) return Ratio::unbounded();
  Rational best = instance.value(i, other.front());
  for (GoodIndex g : other) best = max(best, instance.value(i, g));
  return Ratio::quotient(bundle_value(instance, i, allocation.bundle(i)),
                         bundle_value(instance, i, other) - best);
}

Ratio efx_ratio_pair(const Instance& instance, AgentIndex i, AgentIndex j, const Allocation& allocation,
                     const EvalOptions& options) {
  check_pair(instance, i, j, allocation);
  std::optional<Rational> binding;
  for (GoodIndex g : allocation.bundle(j)) {
    const Rational& v = instance.value(i, g);
    if (!options.strict_efx && v.is_zero()) continue;
    if (!binding || v < *binding) binding = v;
  }
  if (!binding) return Ratio::unbounded();
  return Ratio::quotient(bundle_value(instance, i, allocation.bundle(i)),
                         bundle_value(instance, i, allocation.bundle(j)) - *binding);
}

Ratio pmms_ratio_pair(const Instance& instance, AgentIndex i, AgentIndex j, const Allocation& allocation,
                      const EvalOptions& options) {
  check_pair(instance, i, j, allocation);
  Bundle joined;
  std::merge(allocation.bundle(i).begin(), allocation.bundle(i).end(), allocation.bundle(j).begin(),
             allocation.bundle(j).end(), std::back_inserter(joined));
  return Ratio::quotient(bundle_value(instance, i, allocation.bundle(i)),
                         fairdiv::pairwise_base(instance, i, joined, options.limits));
}

Ratio mms_ratio_agent(const Instance& instance, AgentIndex i, const Allocation& allocation,
                      const EvalOptions& options) {
  allocation.check_against(instance);
  if (i >= instance.agent_count()) throw Error(ErrorKind::index_out_of_range, "agent", std::to_string(i));
  MmsQuery query{i, instance.agent_count(), {}};
  query.goods.resize(instance.good_count());
  std::iota(query.goods.begin(), query.goods.end(), GoodIndex{0});
  return Ratio::quotient(bundle_value(instance, i, allocation.bundle(i)),
                         fairdiv::maximin_share(instance, query, options.limits).value);
}

const Ratio& FairnessReport::aggregate(Notion notion) const {
  switch (notion) {
    case Notion::ef: return ef;
    case Notion::ef1: return ef1;
    case Notion::efx: return efx;
    case Notion::mms: return mms;
    case Notion::pmms: return pmms;
  }
  return ef;
}

Evaluator::Evaluator(const Instance& instance, EvalOptions options)
    : instance_(&instance),
      options_(options),
      n_(instance.agent_count()),
      m_(instance.good_count()),
      mu_(n_),
      parts_(n_ * n_),
      masks_(n_, 0),
      bundles_(n_) {
  if (m_ <= kDenseBaseGoods) {
    dense_base_.resize(n_ << m_);
  } else if (m_ <= kMaskGoods) {
    sparse_base_.resize(n_);
  }
}

const Rational& Evaluator::maximin_share(AgentIndex agent) {
  if (agent >= n_) throw Error(ErrorKind::index_out_of_range, "agent", std::to_string(agent));
  if (!mu_[agent]) {
    const auto row = instance_->row(agent);
    for (AgentIndex k = 0; k < n_; ++k) {
      if (k != agent && mu_[k] && std::ranges::equal(instance_->row(k), row)) {
        mu_[agent] = mu_[k];
        return *mu_[agent];
      }
    }
    MmsResult r = max_min_partition(row, n_, options_.limits);
    mu_[agent] = std::move(r.value);
  }
  return *mu_[agent];
}

Rational Evaluator::pairwise_base(AgentIndex agent, std::span<const GoodIndex> goods) {
  if (m_ <= kMaskGoods) {
    std::uint64_t mask = 0;
    for (GoodIndex g : goods) {
      if (g >= m_) throw Error(ErrorKind::index_out_of_range, "goods", std::to_string(g));
      mask |= std::uint64_t{1} << g;
    }
    return base_for_mask(agent, mask);
  }
  return fairdiv::pairwise_base(*instance_, agent, goods, options_.limits);
}

Rational Evaluator::base_for_mask(AgentIndex agent, std::uint64_t mask) {
  auto compute = [&] {
    const auto row = instance_->row(agent);
    std::vector<Rational> values;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      values.push_back(row[static_cast<std::size_t>(std::countr_zero(rest))]);
    }
    return max_half_subset_sum(values, options_.limits);
  };
  if (!dense_base_.empty()) {
    auto& slot = dense_base_[(agent << m_) | mask];
    if (!slot) slot = compute();
    return *slot;
  }
  auto& cache = sparse_base_[agent];
  if (auto it = cache.find(mask); it != cache.end()) return it->second;
  return cache.emplace(mask, compute()).first->second;
}

void Evaluator::collect(std::span<const AgentIndex> owners) {
  if (owners.size() != m_) throw Error(ErrorKind::dimension_mismatch, "owners", "one owner per good");
  for (auto& p : parts_) {
    p.other = 0;
    p.empty = true;
    p.any_positive = false;
  }
  std::fill(masks_.begin(), masks_.end(), 0);
  for (auto& b : bundles_) b.clear();
  for (GoodIndex g = 0; g < m_; ++g) {
    const AgentIndex o = owners[g];
    if (o >= n_) throw Error(ErrorKind::index_out_of_range, "owners", std::to_string(o));
    if (m_ <= kMaskGoods) {
      masks_[o] |= std::uint64_t{1} << g;
    } else {
      bundles_[o].push_back(g);
    }
    for (AgentIndex i = 0; i < n_; ++i) {
      const Rational& v = instance_->value(i, g);
      PairParts& p = parts_[i * n_ + o];
      p.other += v;
      if (p.empty) {
        p.max_item = v;
        p.min_item = v;
        p.empty = false;
      } else {
        if (p.max_item < v) p.max_item = v;
        if (v < p.min_item) p.min_item = v;
      }
      if (v.sign() > 0) {
        if (!p.any_positive || v < p.min_positive) p.min_positive = v;
        p.any_positive = true;
      }
    }
  }
}

Ratio Evaluator::pair_ef(AgentIndex i, AgentIndex j) const {
  return Ratio::quotient(parts_[i * n_ + i].other, parts_[i * n_ + j].other);
}

Ratio Evaluator::pair_ef1(AgentIndex i, AgentIndex j) const {
  const PairParts& p = parts_[i * n_ + j];
  if (p.empty) return Ratio::unbounded();
  return Ratio::quotient(parts_[i * n_ + i].other, p.other - p.max_item);
}

Ratio Evaluator::pair_efx(AgentIndex i, AgentIndex j) const {
  const PairParts& p = parts_[i * n_ + j];
  if (options_.strict_efx) {
    if (p.empty) return Ratio::unbounded();
    return Ratio::quotient(parts_[i * n_ + i].other, p.other - p.min_item);
  }
  if (!p.any_positive) return Ratio::unbounded();
  return Ratio::quotient(parts_[i * n_ + i].other, p.other - p.min_positive);
}

Ratio Evaluator::pair_pmms(AgentIndex i, AgentIndex j) {
  Rational base;
  if (m_ <= kMaskGoods) {
    base = base_for_mask(i, masks_[i] | masks_[j]);
  } else {
    Bundle joined;
    std::merge(bundles_[i].begin(), bundles_[i].end(), bundles_[j].begin(), bundles_[j].end(),
               std::back_inserter(joined));
    base = fairdiv::pairwise_base(*instance_, i, joined, options_.limits);
  }
  return Ratio::quotient(parts_[i * n_ + i].other, base);
}

Ratio Evaluator::agent_mms(AgentIndex i) { return Ratio::quotient(parts_[i * n_ + i].other, maximin_share(i)); }

FairnessReport Evaluator::report(const Allocation& allocation) {
  allocation.check_against(*instance_);
  collect(allocation.owners());
  FairnessReport r;
  for (AgentIndex i = 0; i < n_; ++i) {
    for (AgentIndex j = 0; j < n_; ++j) {
      if (i == j) continue;
      PairRatios p{i, j, pair_ef(i, j), pair_ef1(i, j), pair_efx(i, j), pair_pmms(i, j)};
      r.ef = min(r.ef, p.ef);
      r.ef1 = min(r.ef1, p.ef1);
      r.efx = min(r.efx, p.efx);
      r.pmms = min(r.pmms, p.pmms);
      r.pairs.push_back(std::move(p));
    }
  }
  for (AgentIndex i = 0; i < n_; ++i) {
    r.own_value.push_back(parts_[i * n_ + i].other);
    r.maximin_share.push_back(maximin_share(i));
    r.mms_agent.push_back(agent_mms(i));
    r.mms = min(r.mms, r.mms_agent.back());
  }
  return r;
}

Ratio Evaluator::aggregate(Notion notion) {
  Ratio out;
  if (notion == Notion::mms) {
    for (AgentIndex i = 0; i < n_; ++i) out = min(out, agent_mms(i));
    return out;
  }
  for (AgentIndex i = 0; i < n_; ++i) {
    for (AgentIndex j = 0; j < n_; ++j) {
      if (i == j) continue;
      switch (notion) {
        case Notion::ef: out = min(out, pair_ef(i, j)); break;
        case Notion::ef1: out = min(out, pair_ef1(i, j)); break;
        case Notion::efx: out = min(out, pair_efx(i, j)); break;
        case Notion::pmms: out = min(out, pair_pmms(i, j)); break;
        case Notion::mms: break;
      }
    }
  }
  return out;
}

NotionRatios Evaluator::aggregates(std::span<const AgentIndex> owners, NotionMask notions) {
  collect(owners);
  NotionRatios out;
  for (Notion n : kAllNotions) {
    if (notions & mask_of(n)) out[n] = aggregate(n);
  }
  return out;
}

FairnessReport full_report(const Instance& instance, const Allocation& allocation, const EvalOptions& options) {
  Evaluator evaluator(instance, options);
  return evaluator.report(allocation);
}

}  // namespace fairdiv
