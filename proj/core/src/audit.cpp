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

#include "fairdiv/audit.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <numeric>
#include <random>
#include <thread>
#include <utility>

#include "fairdiv/errors.hpp"

namespace fairdiv {
namespace {

Rational frac(std::int64_t p, std::int64_t q) { return Rational(p, q); }
Rational from_size(std::size_t n) { return Rational(static_cast<std::int64_t>(n)); }

std::vector<ImplicationRule> build_catalog() {
  std::vector<ImplicationRule> rules;
  auto at_least = [](std::size_t lo) { return [lo](std::size_t n) { return n >= lo; }; };

  rules.push_back({"prop1", "EFX@a => EF1@a", "n >= 2", Notion::efx, Notion::ef1, std::nullopt,
                   [](const Rational& a, std::size_t) { return a; }, at_least(2)});
  rules.push_back({"prop2", "EFX@1 => MMS@2/3", "n in {2, 3}", Notion::efx, Notion::mms, Rational(1),
                   [](const Rational&, std::size_t) { return frac(2, 3); },
                   [](std::size_t n) { return n == 2 || n == 3; }});
  rules.push_back({"prop3", "EFX@1 => MMS@4/7", "n >= 4", Notion::efx, Notion::mms, Rational(1),
                   [](const Rational&, std::size_t) { return frac(4, 7); }, at_least(4)});
  rules.push_back({"prop4", "EFX@a => MMS@a*n/(a+2n-2)", "n >= 2", Notion::efx, Notion::mms, std::nullopt,
                   [](const Rational& a, std::size_t n) {
                     const Rational nn = from_size(n);
                     return a * nn / (a + Rational(2) * nn - Rational(2));
                   },
                   at_least(2)});
  rules.push_back({"prop5", "EF1@a => MMS@a/(n-1+a)", "n >= 2", Notion::ef1, Notion::mms, std::nullopt,
                   [](const Rational& a, std::size_t n) { return a / (from_size(n) - Rational(1) + a); },
                   at_least(2)});
  rules.push_back({"prop6", "EFX@a => PMMS@2a/(2+a)", "n >= 2", Notion::efx, Notion::pmms, std::nullopt,
                   [](const Rational& a, std::size_t) { return Rational(2) * a / (Rational(2) + a); },
                   at_least(2)});
  rules.push_back({"prop7", "EF1@a => PMMS@a/(1+a)", "n >= 3", Notion::ef1, Notion::pmms, std::nullopt,
                   [](const Rational& a, std::size_t) { return a / (Rational(1) + a); }, at_least(3)});
  rules.push_back({"prop8", "PMMS@1 => EFX@1", "n >= 2", Notion::pmms, Notion::efx, Rational(1),
                   [](const Rational&, std::size_t) { return Rational(1); }, at_least(2)});
  rules.push_back({"cor9", "PMMS@1 => MMS@2/3 (n = 3), MMS@4/7 (n >= 4)", "n >= 3", Notion::pmms, Notion::mms,
                   Rational(1),
                   [](const Rational&, std::size_t n) { return n == 3 ? frac(2, 3) : frac(4, 7); }, at_least(3)});
  rules.push_back({"prop10", "PMMS@a => MMS@a/(2(n-1)-a(n-2))", "n >= 3", Notion::pmms, Notion::mms,
                   std::nullopt,
                   [](const Rational& a, std::size_t n) {
                     const Rational nn = from_size(n);
                     return a / (Rational(2) * (nn - Rational(1)) - a * (nn - Rational(2)));
                   },
                   at_least(3)});
  rules.push_back({"prop12", "PMMS@a => EF1@a/(2-a)", "n >= 2", Notion::pmms, Notion::ef1, std::nullopt,
                   [](const Rational& a, std::size_t) { return a / (Rational(2) - a); }, at_least(2)});
  return rules;
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::vector<Rational> rule_alphas(const ImplicationRule& rule, const AuditSpace& space) {
  if (rule.fixed_alpha) return {*rule.fixed_alpha};
  return space.alphas;
}

struct Candidate {
  std::vector<AgentIndex> owners;
  Ratio premise;
  Ratio conclusion;
  Rational guarantee;
};

struct Slot {
  std::uint64_t premise_satisfied = 0;
  std::uint64_t violations = 0;
  std::optional<Candidate> witness;
  std::vector<Candidate> samples;
};

struct Job {
  std::size_t instance = 0;
  std::vector<std::size_t> rules;  // indices into the audited rule list
};

struct JobResult {
  std::uint64_t allocations = 0;
  std::vector<std::vector<Slot>> slots;  // [rule in job][alpha]
};

JobResult run_job(const Instance& instance, const Job& job, const std::vector<const ImplicationRule*>& rules,
                  const std::vector<std::vector<Rational>>& alphas, const AuditSpace& space) {
  const std::size_t n = instance.agent_count();
  JobResult result;
  result.slots.resize(job.rules.size());
  std::vector<std::vector<Rational>> guarantees(job.rules.size());
  for (std::size_t k = 0; k < job.rules.size(); ++k) {
    const std::size_t r = job.rules[k];
    result.slots[k].resize(alphas[r].size());
    for (const Rational& a : alphas[r]) guarantees[k].push_back(rules[r]->guarantee(a, n));
  }

  Evaluator evaluator(instance, space.eval);
  std::array<std::optional<Ratio>, kNotionCount> cache;
  auto get = [&](Notion notion) -> const Ratio& {
    auto& slot = cache[static_cast<std::size_t>(notion)];
    if (!slot) slot = evaluator.aggregate(notion);
    return *slot;
  };

  result.allocations = for_each_allocation(instance, space.budget, [&](std::span<const AgentIndex> owners) {
    evaluator.load(owners);
    cache.fill(std::nullopt);
    for (std::size_t k = 0; k < job.rules.size(); ++k) {
      const ImplicationRule& rule = *rules[job.rules[k]];
      const auto& rule_alphas = alphas[job.rules[k]];
      const Ratio& premise = get(rule.premise);
      for (std::size_t a = 0; a < rule_alphas.size(); ++a) {
        if (!premise.satisfies(rule_alphas[a])) continue;
        const Ratio& conclusion = get(rule.conclusion);
        Slot& slot = result.slots[k][a];
        ++slot.premise_satisfied;
        auto candidate = [&] {
          return Candidate{std::vector<AgentIndex>(owners.begin(), owners.end()), premise, conclusion,
                           guarantees[k][a]};
        };
        if (!conclusion.satisfies(guarantees[k][a])) {
          ++slot.violations;
          if (slot.samples.size() < AuditReport::kViolationSamples) slot.samples.push_back(candidate());
        }
        if (!slot.witness || conclusion < slot.witness->conclusion) slot.witness = candidate();
      }
    }
    return true;
  });
  return result;
}

AuditCase make_case(const Instance& instance, const Candidate& c, const Rational& alpha) {
  return AuditCase{instance, Allocation::from_owners(c.owners, instance.agent_count()), alpha, c.premise,
                   c.conclusion, c.guarantee};
}

std::string describe_agents(const ImplicationRule& rule, const AuditSpace& space) {
  return "rule " + rule.id + " applies for " + rule.applicability + ", but the space has n in " +
         std::to_string(space.n_min) + ".." + std::to_string(space.n_max);
}

// Conclusion minus guarantee; none for Unbounded conclusions.
std::optional<Rational> slack(const AuditCase& c) {
  if (c.conclusion.is_unbounded()) return std::nullopt;
  return c.conclusion.value() - c.guarantee;
}

}  // namespace

const std::vector<ImplicationRule>& rule_catalog() {
  static const std::vector<ImplicationRule> catalog = build_catalog();
  return catalog;
}

const ImplicationRule* find_rule(std::string_view id) {
  for (const auto& rule : rule_catalog()) {
    if (rule.id == id) return &rule;
  }
  return nullptr;
}

AuditSpace AuditSpace::exhaustive_default() {
  AuditSpace space;
  space.kind = SpaceKind::exhaustive;
  space.n_min = 2;
  space.n_max = 3;
  space.m_min = 0;
  space.m_max = 5;
  space.value_min = 0;
  space.value_max = 2;
  return space;
}

AuditSpace AuditSpace::random_default() { return AuditSpace{}; }

std::vector<std::size_t> applicable_agents(const ImplicationRule& rule, const AuditSpace& space) {
  std::vector<std::size_t> out;
  for (std::size_t n = std::max<std::size_t>(space.n_min, 1); n <= space.n_max; ++n) {
    if (rule.applies(n)) out.push_back(n);
  }
  return out;
}

std::vector<Instance> exhaustive_instances(std::size_t n, std::size_t m, std::int64_t value_min,
                                           std::int64_t value_max) {
  if (n == 0) throw Error(ErrorKind::invalid_parameter, "n", "must be at least 1");
  if (value_max < value_min) throw Error(ErrorKind::invalid_parameter, "values", "empty range");
  const std::size_t base = static_cast<std::size_t>(value_max - value_min + 1);
  std::size_t types = 1;
  for (std::size_t i = 0; i < n; ++i) types *= base;

  // Column type t has agent i's value at digit i (agent 0 most significant).
  auto digit = [&](std::size_t t, std::size_t i) {
    for (std::size_t k = i + 1; k < n; ++k) t /= base;
    return t % base;
  };
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> permuted;  // permuted[p][t]
  do {
    std::vector<std::size_t> image(types);
    for (std::size_t t = 0; t < types; ++t) {
      std::size_t u = 0;
      for (std::size_t i = 0; i < n; ++i) u = u * base + digit(t, perm[i]);
      image[t] = u;
    }
    permuted.push_back(std::move(image));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Instance> out;
  std::vector<std::size_t> columns(m, 0);
  std::vector<std::size_t> scratch(m);
  auto emit = [&] {
    for (const auto& image : permuted) {
      for (std::size_t g = 0; g < m; ++g) scratch[g] = image[columns[g]];
      std::sort(scratch.begin(), scratch.end());
      if (std::lexicographical_compare(scratch.begin(), scratch.end(), columns.begin(), columns.end())) return;
    }
    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(m));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t g = 0; g < m; ++g) {
        rows[i][g] = Rational(value_min + static_cast<std::int64_t>(digit(columns[g], i)));
      }
    }
    out.push_back(Instance::from_rows(std::move(rows)));
  };
  // Non-decreasing column sequences: multisets of column types.
  while (true) {
    emit();
    std::size_t g = m;
    while (g > 0 && columns[g - 1] + 1 == types) --g;
    if (g == 0) break;
    const std::size_t next = columns[g - 1] + 1;
    for (std::size_t k = g - 1; k < m; ++k) columns[k] = next;
  }
  return out;
}

std::vector<AuditReport> run_audit(const std::vector<const ImplicationRule*>& rules, const AuditSpace& space) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::vector<Rational>> alphas;
  for (const auto* rule : rules) alphas.push_back(rule_alphas(*rule, space));

  std::vector<Instance> instances;
  std::vector<Job> jobs;
  switch (space.kind) {
    case SpaceKind::exhaustive: {
      for (const auto* rule : rules) {
        if (applicable_agents(*rule, space).empty()) {
          throw Error(ErrorKind::rule_inapplicable, "n", describe_agents(*rule, space));
        }
      }
      for (std::size_t n = std::max<std::size_t>(space.n_min, 1); n <= space.n_max; ++n) {
        std::vector<std::size_t> active;
        for (std::size_t r = 0; r < rules.size(); ++r) {
          if (rules[r]->applies(n)) active.push_back(r);
        }
        if (active.empty()) continue;
        for (std::size_t m = space.m_min; m <= space.m_max; ++m) {
          for (auto& inst : exhaustive_instances(n, m, space.value_min, space.value_max)) {
            jobs.push_back({instances.size(), active});
            instances.push_back(std::move(inst));
          }
        }
      }
      break;
    }
    case SpaceKind::random: {
      if (space.value_min < 0 || space.value_max < space.value_min) {
        throw Error(ErrorKind::invalid_parameter, "values", "need 0 <= min <= max");
      }
      if (space.m_max < space.m_min) throw Error(ErrorKind::invalid_parameter, "m", "empty range");
      for (std::size_t r = 0; r < rules.size(); ++r) {
        const auto ns = applicable_agents(*rules[r], space);
        if (ns.empty()) throw Error(ErrorKind::rule_inapplicable, "n", describe_agents(*rules[r], space));
        std::mt19937_64 rng(space.seed + fnv1a(rules[r]->id));
        std::uniform_int_distribution<std::size_t> pick_n(0, ns.size() - 1);
        std::uniform_int_distribution<std::size_t> pick_m(space.m_min, space.m_max);
        std::uniform_int_distribution<std::int64_t> pick_v(space.value_min, space.value_max);
        for (std::size_t t = 0; t < space.trials; ++t) {
          const std::size_t n = ns[pick_n(rng)];
          const std::size_t m = pick_m(rng);
          std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(m));
          for (auto& row : rows) {
            for (auto& v : row) v = Rational(pick_v(rng));
          }
          jobs.push_back({instances.size(), {r}});
          instances.push_back(Instance::from_rows(std::move(rows), rules[r]->id + "-" + std::to_string(t)));
        }
      }
      break;
    }
    case SpaceKind::instances: {
      for (std::size_t r = 0; r < rules.size(); ++r) {
        bool any = false;
        for (const auto& inst : space.instances) any = any || rules[r]->applies(inst.agent_count());
        if (!any) {
          throw Error(ErrorKind::rule_inapplicable, "n",
                      "rule " + rules[r]->id + " applies for " + rules[r]->applicability +
                          ", which no given instance satisfies");
        }
      }
      for (const auto& inst : space.instances) {
        std::vector<std::size_t> active;
        for (std::size_t r = 0; r < rules.size(); ++r) {
          if (rules[r]->applies(inst.agent_count())) active.push_back(r);
        }
        if (active.empty()) continue;
        jobs.push_back({instances.size(), active});
        instances.push_back(inst);
      }
      break;
    }
  }
  for (const auto& inst : instances) check_budget(inst, space.budget);

  std::vector<JobResult> results(jobs.size());
  std::size_t workers = space.threads != 0 ? space.threads : std::max(1U, std::thread::hardware_concurrency());
  workers = std::max<std::size_t>(1, std::min(workers, jobs.size()));
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](std::size_t w) {
    const std::size_t begin = jobs.size() * w / workers;
    const std::size_t end = jobs.size() * (w + 1) / workers;
    try {
      for (std::size_t k = begin; k < end; ++k) {
        results[k] = run_job(instances[jobs[k].instance], jobs[k], rules, alphas, space);
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<AuditReport> reports(rules.size());
  for (std::size_t r = 0; r < rules.size(); ++r) {
    reports[r].rule_id = rules[r]->id;
    reports[r].kind = space.kind;
    reports[r].seed = space.seed;
    for (const Rational& a : alphas[r]) reports[r].alphas.push_back(AlphaSummary{a, 0, 0, std::nullopt});
  }
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    const Instance& inst = instances[jobs[k].instance];
    for (std::size_t j = 0; j < jobs[k].rules.size(); ++j) {
      AuditReport& report = reports[jobs[k].rules[j]];
      ++report.instances_checked;
      report.allocations_checked += results[k].allocations;
      for (std::size_t a = 0; a < report.alphas.size(); ++a) {
        const Slot& slot = results[k].slots[j][a];
        AlphaSummary& summary = report.alphas[a];
        summary.premise_satisfied += slot.premise_satisfied;
        summary.violations += slot.violations;
        report.violation_count += slot.violations;
        for (const auto& c : slot.samples) {
          if (report.violations.size() < AuditReport::kViolationSamples) {
            report.violations.push_back(make_case(inst, c, summary.alpha));
          }
        }
        if (slot.witness && (!summary.tight_witness || slot.witness->conclusion < summary.tight_witness->conclusion)) {
          summary.tight_witness = make_case(inst, *slot.witness, summary.alpha);
        }
      }
    }
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;
  for (auto& report : reports) {
    for (const auto& summary : report.alphas) {
      if (!summary.tight_witness) continue;
      if (!report.tight_witness) {
        report.tight_witness = summary.tight_witness;
        continue;
      }
      const auto current = slack(*report.tight_witness);
      const auto candidate = slack(*summary.tight_witness);
      if (candidate && (!current || *candidate < *current)) report.tight_witness = summary.tight_witness;
    }
    report.elapsed = elapsed;
  }
  return reports;
}

AuditReport audit_implication(const ImplicationRule& rule, const AuditSpace& space) {
  return run_audit({&rule}, space).front();
}

std::string_view to_string(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::exhaustive: return "exhaustive";
    case SpaceKind::random: return "random";
    case SpaceKind::instances: return "instances";
  }
  return "?";
}

Json to_json(const AuditCase& c) {
  Json doc = Json::object();
  doc["alpha"] = c.alpha.to_string();
  doc["premise"] = c.premise.to_string();
  doc["conclusion"] = c.conclusion.to_string();
  doc["guarantee"] = c.guarantee.to_string();
  doc["instance"] = to_json(c.instance);
  doc["allocation"] = to_json(c.allocation);
  return doc;
}

Json to_json(const AuditReport& report, bool include_timing) {
  Json doc = Json::object();
  doc["rule"] = report.rule_id;
  if (const auto* rule = find_rule(report.rule_id)) {
    doc["statement"] = rule->statement;
    doc["applicability"] = rule->applicability;
  }
  doc["space"] = std::string(to_string(report.kind));
  doc["seed"] = report.seed;
  doc["passed"] = report.passed();
  doc["instances_checked"] = report.instances_checked;
  doc["allocations_checked"] = report.allocations_checked;
  doc["violation_count"] = report.violation_count;
  Json alphas = Json::array();
  for (const auto& a : report.alphas) {
    Json e = Json::object();
    e["alpha"] = a.alpha.to_string();
    e["premise_satisfied"] = a.premise_satisfied;
    e["violations"] = a.violations;
    e["min_conclusion"] = a.tight_witness ? Json(a.tight_witness->conclusion.to_string()) : Json(nullptr);
    alphas.push_back(std::move(e));
  }
  doc["alphas"] = std::move(alphas);
  doc["tight_witness"] = report.tight_witness ? to_json(*report.tight_witness) : Json(nullptr);
  Json violations = Json::array();
  for (const auto& v : report.violations) violations.push_back(to_json(v));
  doc["violations"] = std::move(violations);
  if (include_timing) doc["elapsed_seconds"] = report.elapsed.count();
  return doc;
}

}  // namespace fairdiv
