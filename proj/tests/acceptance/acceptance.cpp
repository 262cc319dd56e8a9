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

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. Time limits are wall-clock seconds.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fairdiv/algorithms.hpp"
#include "fairdiv/audit.hpp"
#include "fairdiv/errors.hpp"
#include "fairdiv/gallery.hpp"
#include "fairdiv/maximin.hpp"
#include "fairdiv/measures.hpp"
#include "fairdiv/oracle.hpp"
#include "naive.hpp"

namespace {

using namespace fairdiv;

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  void equal(const Ratio& got, const Ratio& want, const std::string& what) {
    expect(got == want, what + ": got " + got.to_string() + ", want " + want.to_string());
  }
  void at_least(const Ratio& got, const Rational& floor, const std::string& what) {
    expect(got.satisfies(floor), what + ": got " + got.to_string() + ", want >= " + floor.to_string());
  }
  void note(std::string text) { notes_.push_back(std::move(text)); }

  [[nodiscard]] bool ok() const { return failed_ == 0; }
  [[nodiscard]] std::string summary() const {
    std::ostringstream out;
    out << count_ << " checks";
    for (const auto& n : notes_) out << "; " << n;
    if (failed_ > 0) {
      out << "; " << failed_ << " failed";
      for (const auto& f : failures_) out << "\n      " << f;
    }
    return out.str();
  }

 private:
  std::size_t count_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

Ratio fin(const Rational& v) { return Ratio::finite(v); }
Rational q(std::int64_t p, std::int64_t d = 1) { return Rational(p, d); }

const std::vector<Rational>& alpha_sweep() {
  static const std::vector<Rational> sweep{q(1, 4), q(1, 2), q(3, 4), q(1)};
  return sweep;
}

std::vector<GoodIndex> all_goods(const Instance& inst) {
  std::vector<GoodIndex> goods(inst.good_count());
  for (GoodIndex g = 0; g < goods.size(); ++g) goods[g] = g;
  return goods;
}

// Nothing for parameters outside the entry's domain.
std::optional<Construction> try_build(const std::string& id, const Params& params) {
  try {
    return build(id, params);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::invalid_parameter) throw;
    return std::nullopt;
  }
}

// Checks every expected ratio the construction records for its scenarios.
void check_recorded(Checker& c, const Construction& k, const std::string& label) {
  for (const auto& s : k.scenarios) {
    const FairnessReport r = full_report(k.instance, s.allocation);
    for (const auto& [notion, want] : s.expected) {
      c.equal(r.aggregate(notion), want, label + " " + s.name + " " + std::string(to_string(notion)));
    }
  }
}

void criterion_1(Checker& c) {
  const Construction ex = build("example1");
  const FairnessReport a = full_report(ex.instance, ex.scenarios.at(0).allocation);
  for (Notion n : kAllNotions) c.at_least(a.aggregate(n), q(1), "A " + std::string(to_string(n)));
  const FairnessReport b = full_report(ex.instance, ex.scenarios.at(1).allocation);
  c.at_least(b.ef1, q(1), "B ef1");
  c.at_least(b.mms, q(1), "B mms");
  c.equal(b.efx, fin(q(3, 4)), "B efx");
  c.equal(b.pmms, fin(q(3, 4)), "B pmms");
  c.expect(b.ef < fin(q(1)), "B ef < 1: got " + b.ef.to_string());
}

void criterion_2(Checker& c) {
  const Instance inst = build("example1").instance;
  const std::vector<Rational> want{q(3), q(4), q(4)};
  for (AgentIndex i = 0; i < 3; ++i) {
    const MmsResult r = maximin_share(inst, {i, 3, all_goods(inst)});
    c.equal(fin(r.value), fin(want[i]), "mu_" + std::to_string(i + 1));
  }
}

void criterion_3(Checker& c) {
  for (const auto& entry : list_entries()) check_recorded(c, build(entry.id), entry.id + "@defaults");

  // Closed forms, computed here from the construction's parameters.
  using Form = std::function<void(const Construction&, const FairnessReport&, const std::string&)>;
  auto mms_is = [&c](std::function<Rational(const Params&)> f) -> Form {
    return [&c, f](const Construction& k, const FairnessReport& r, const std::string& l) {
      c.equal(r.mms, fin(f(k.params)), l + " mms");
    };
  };
  const auto n_of = [](const Params& p) { return p.at("n"); };
  struct Case {
    std::string id;
    bool sweep;
    std::vector<Form> forms;
  };
  const std::vector<Case> cases{
      {"prop2-tight", false, {mms_is([](const Params&) { return q(2, 3); })}},
      {"prop3-8-13",
       false,
       {mms_is([](const Params&) { return q(8, 13); }),
        [&c](const Construction&, const FairnessReport& r, const std::string& l) {
          c.equal(r.efx, fin(q(1)), l + " efx");
        }}},
      {"prop4-2agent", true, {mms_is([](const Params& p) {
         const Rational& a = p.at("alpha");
         return q(2) * a / (q(2) + a);
       })}},
      {"prop5-tight", true, {mms_is([n_of](const Params& p) {
         const Rational& a = p.at("alpha");
         return a / (n_of(p) - q(1) + a);
       })}},
      {"prop6-tight",
       true,
       {[&c](const Construction& k, const FairnessReport& r, const std::string& l) {
         const Rational& a = k.params.at("alpha");
         c.equal(r.pmms, fin(q(2) * a / (q(2) + a)), l + " pmms");
       }}},
      {"prop9-2-3",
       false,
       {mms_is([](const Params&) { return q(2, 3); }),
        [&c](const Construction&, const FairnessReport& r, const std::string& l) {
          c.equal(r.pmms, fin(q(1)), l + " pmms");
        }}},
      {"prop10-tight", true, {mms_is([n_of](const Params& p) {
         const Rational& a = p.at("alpha");
         const Rational n = n_of(p);
         return a / (n - q(1) - a * (n - q(2)));
       })}},
      {"prop14-pmms-not-efx",
       true,
       {[&c](const Construction& k, const FairnessReport& r, const std::string& l) {
         c.equal(r.pmms, fin(k.params.at("alpha")), l + " pmms");
         c.equal(r.efx, fin(q(1) / k.params.at("V")), l + " efx");
       }}},
  };

  std::size_t skipped = 0;
  for (const auto& cs : cases) {
    std::vector<Params> settings{{}};
    if (cs.sweep) {
      settings.clear();
      for (const auto& a : alpha_sweep()) settings.push_back({{"alpha", a}});
    }
    for (const auto& params : settings) {
      const auto k = try_build(cs.id, params);
      if (!k) {
        ++skipped;
        continue;
      }
      std::string label = cs.id;
      for (const auto& [name, value] : params) label += " " + name + "=" + value.to_string();
      const FairnessReport r = full_report(k->instance, k->scenarios.at(0).allocation);
      for (const auto& form : cs.forms) form(*k, r, label);
    }
  }

  // Every other alpha-parameterized entry reproduces its own record across the sweep.
  for (const auto& entry : list_entries()) {
    const bool has_alpha = std::any_of(entry.params.begin(), entry.params.end(),
                                       [](const ParamSpec& p) { return p.name == "alpha"; });
    if (!has_alpha) continue;
    for (const auto& a : alpha_sweep()) {
      const auto k = try_build(entry.id, {{"alpha", a}});
      if (!k) {
        ++skipped;
        continue;
      }
      check_recorded(c, *k, entry.id + " alpha=" + a.to_string());
    }
  }
  c.note(std::to_string(skipped) + " (entry, alpha) pairs outside the entry's domain");
}

void criterion_4(Checker& c) {
  const Construction k = build("sylvester-pmms", {{"n", q(21)}});
  const MmsResult mu = maximin_share(k.instance, {0, 21, all_goods(k.instance)});
  c.equal(fin(mu.value), fin(q(5, 3)), "mu_1(21, M)");
  const FairnessReport r = full_report(k.instance, k.scenarios.at(0).allocation);
  c.equal(r.mms_agent.at(0), fin(q(3, 5)), "agent 1 mms ratio");
  c.equal(r.pmms, fin(q(1)), "pmms");
}

void record_audits(Checker& c, const std::vector<AuditReport>& reports, const std::string& label) {
  for (const auto& r : reports) {
    c.expect(r.passed(), label + " " + r.rule_id + ": " + std::to_string(r.violation_count) + " violations");
    std::uint64_t premise = 0;
    for (const auto& a : r.alphas) premise += a.premise_satisfied;
    c.expect(premise > 0, label + " " + r.rule_id + ": premise never satisfied");
  }
}

void criterion_5(Checker& c) {
  std::vector<const ImplicationRule*> all;
  for (const auto& rule : rule_catalog()) all.push_back(&rule);

  AuditSpace ex = AuditSpace::exhaustive_default();
  ex.kind = SpaceKind::exhaustive;
  ex.n_min = 2;
  ex.n_max = 3;
  ex.m_min = 0;
  ex.m_max = 5;
  ex.value_min = 0;
  ex.value_max = 2;
  ex.alphas = alpha_sweep();
  std::vector<const ImplicationRule*> small;
  for (const auto* rule : all) {
    if (!applicable_agents(*rule, ex).empty()) small.push_back(rule);
  }
  record_audits(c, run_audit(small, ex), "exhaustive n<=3");

  // Rules that need more agents get the smallest exhaustive space they apply to.
  std::size_t extra = 0;
  for (const auto* rule : all) {
    if (!applicable_agents(*rule, ex).empty()) continue;
    AuditSpace wide = ex;
    wide.n_min = wide.n_max = 4;
    wide.m_max = 4;
    record_audits(c, run_audit({rule}, wide), "exhaustive n=4 m<=4");
    ++extra;
  }

  AuditSpace rnd = AuditSpace::random_default();
  rnd.kind = SpaceKind::random;
  rnd.n_min = 2;
  rnd.n_max = 4;
  rnd.m_min = 0;
  rnd.m_max = 7;
  rnd.value_min = 0;
  rnd.value_max = 9;
  rnd.trials = 1000;
  rnd.seed = 2026;
  rnd.alphas = alpha_sweep();
  const auto reports = run_audit(all, rnd);
  record_audits(c, reports, "random");
  for (const auto& r : reports) c.expect(r.instances_checked == 1000, r.rule_id + " random instance count");
  c.note(std::to_string(small.size()) + " rules exhaustive at n<=3, " + std::to_string(extra) +
         " at n=4; " + std::to_string(all.size()) + " rules random");
}

Instance random_instance(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  return naive::random_instance(rng, n, m, 0, 9);
}

// A random good order, then non-increasing values along it for each agent.
Instance common_order_instance(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  std::vector<GoodIndex> perm(m);
  for (GoodIndex g = 0; g < m; ++g) perm[g] = g;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::uniform_int_distribution<std::int64_t> top(1, 20);
  std::uniform_int_distribution<std::int64_t> step(0, 4);
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(m));
  for (auto& row : rows) {
    std::int64_t v = top(rng);
    for (GoodIndex g : perm) {
      row[g] = Rational(v);
      v = std::max<std::int64_t>(0, v - step(rng));
    }
  }
  return Instance::from_rows(std::move(rows));
}

void criterion_6(Checker& c) {
  std::mt19937_64 rng(606);
  std::uniform_int_distribution<std::size_t> pick_n(3, 4);
  std::uniform_int_distribution<std::size_t> pick_m(0, 10);
  std::size_t rotated = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = pick_n(rng);
    const Instance inst = random_instance(rng, n, pick_m(rng));
    std::vector<AgentIndex> order(n);
    for (AgentIndex i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    const FairnessReport r = full_report(inst, round_robin(inst, order));
    const std::string l = "round-robin t=" + std::to_string(t);
    c.at_least(r.ef1, q(1), l + " ef1");
    c.at_least(r.pmms, q(1, 2), l + " pmms");
  }
  for (int t = 0; t < 1000; ++t) {
    const Instance inst = common_order_instance(rng, pick_n(rng), pick_m(rng));
    const CommonOrder order = detect_common_order(inst);
    c.expect(order.valid, "common order detected t=" + std::to_string(t));
    if (!order.valid) continue;
    OrderedEfxStats stats;
    const FairnessReport r = full_report(inst, ordered_efx(inst, order, &stats));
    if (stats.rotations > 0) ++rotated;
    const std::string l = "ordered-efx t=" + std::to_string(t);
    c.at_least(r.efx, q(1), l + " efx");
    c.at_least(r.pmms, q(2, 3), l + " pmms");
    c.at_least(r.mms, q(2, 3), l + " mms");
  }
  c.note(std::to_string(rotated) + " ordered-efx runs rotated a cycle");
}

void criterion_7(Checker& c) {
  std::mt19937_64 rng(707);
  std::uniform_int_distribution<std::size_t> pick_n(2, 5);
  std::uniform_int_distribution<std::size_t> pick_m(2, 10);
  std::size_t checks = 0;
  std::uint64_t seed = 0;
  while (checks < 1000) {
    const std::size_t n = pick_n(rng);
    const Instance inst = random_instance(rng, n, pick_m(rng));
    std::uniform_int_distribution<AgentIndex> pick_agent(0, n - 1);
    const MonotonicityReport r = check_monotonicity(inst, pick_agent(rng), 10, ++seed);
    for (const auto& x : r.counterexamples) {
      c.expect(false, "mu drops to " + x.reduced.to_string() + " from " + r.share.to_string());
    }
    c.expect(r.passed, "monotonicity report flagged a failure");
    checks += r.checks;
  }
  c.note(std::to_string(checks) + " (instance, agent, S) triples");
}

void criterion_8(Checker& c) {
  std::mt19937_64 rng(808);
  std::uniform_int_distribution<std::size_t> pick_n(2, 4);
  std::uniform_int_distribution<std::size_t> pick_m(0, 8);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = pick_n(rng);
    const Instance inst = naive::random_instance(rng, n, pick_m(rng), 0, 12, 1 + t % 3);
    std::uniform_int_distribution<AgentIndex> pick_agent(0, n - 1);
    const AgentIndex i = pick_agent(rng);
    const MmsResult got = maximin_share(inst, {i, n, all_goods(inst)});
    const naive::Q want = naive::mms(naive::row(inst, i), n, naive::all_goods(inst.good_count()));
    c.equal(fin(got.value), fin(naive::back(want)), "maximin_share t=" + std::to_string(t));
  }
  std::uniform_int_distribution<std::size_t> pick_s(0, 12);
  for (int t = 0; t < 200; ++t) {
    const Instance inst = naive::random_instance(rng, 2, 16, 0, 30, 1 + t % 4);
    std::vector<GoodIndex> goods = all_goods(inst);
    std::shuffle(goods.begin(), goods.end(), rng);
    goods.resize(pick_s(rng));
    std::sort(goods.begin(), goods.end());
    const Rational base = pairwise_base(inst, 0, goods);
    const MmsResult two = maximin_share(inst, {0, 2, goods});
    const std::string l = "pairwise_base t=" + std::to_string(t);
    c.equal(fin(base), fin(two.value), l);
    c.equal(fin(base), fin(naive::back(naive::mms(naive::row(inst, 0), 2, goods))), l + " naive");
  }
}

void criterion_9(Checker& c) {
  struct Witness {
    std::string id;
    Params params;
  };
  const std::vector<Witness> witnesses{
      {"prop1-ef1-not-efx", {}},
      {"prop1-ef1-not-efx", {{"alpha", q(1, 2)}, {"V", q(50)}, {"n", q(3)}}},
      {"prop11-mms-not-pmms", {}},
      {"prop11-mms-not-pmms", {{"n", q(5)}, {"eps", q(1, 7)}}},
      {"prop13-mms-not-ef1", {}},
      {"prop13-mms-not-ef1", {{"n", q(4)}, {"eps", q(1, 9)}}},
      {"prop14-pmms-not-efx", {}},
      {"prop14-pmms-not-efx", {{"n", q(3)}, {"alpha", q(2, 3)}, {"V", q(10)}}},
  };
  for (const auto& w : witnesses) {
    const Construction k = build(w.id, w.params);
    const FairnessReport r = full_report(k.instance, k.scenarios.at(0).allocation);
    std::string l = w.id;
    for (const auto& [name, value] : k.params) l += " " + name + "=" + value.to_string();
    const Params& p = k.params;
    if (w.id == "prop1-ef1-not-efx") {
      c.at_least(r.ef1, p.at("alpha"), l + " ef1");
      c.equal(r.efx, fin(p.at("alpha") / p.at("V")), l + " efx");
    } else if (w.id == "prop11-mms-not-pmms") {
      c.at_least(r.mms, q(1), l + " mms");
      c.expect(!r.pmms.satisfies(p.at("eps")) || r.pmms == p.at("eps"), l + " pmms <= eps: " + r.pmms.to_string());
    } else if (w.id == "prop13-mms-not-ef1") {
      c.at_least(r.mms, q(1), l + " mms");
      c.expect(!r.ef1.satisfies(p.at("eps")) || r.ef1 == p.at("eps"), l + " ef1 <= eps: " + r.ef1.to_string());
    } else {
      c.equal(r.pmms, fin(p.at("alpha")), l + " pmms");
      c.equal(r.efx, fin(q(1) / p.at("V")), l + " efx");
    }
    check_recorded(c, k, l);
  }
}

struct Criterion {
  int number;
  const char* name;
  double limit_seconds;
  void (*run)(Checker&);
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "example allocations A and B", 1.0, criterion_1},
      {2, "example maximin shares", 1.0, criterion_2},
      {3, "tightness suite", 30.0, criterion_3},
      {4, "sylvester instance n = 21", 60.0, criterion_4},
      {5, "implication audits", 600.0, criterion_5},
      {6, "algorithm guarantees", 300.0, criterion_6},
      {7, "maximin monotonicity", 120.0, criterion_7},
      {8, "oracle equivalence", 120.0, criterion_8},
      {9, "negative witnesses", 10.0, criterion_9},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Checker checker;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      cr.run(checker);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < cr.limit_seconds;
    const bool pass = error.empty() && checker.ok() && in_time;
    if (!pass) ++failed;
    std::printf("%s criterion %d %s: %.3f s (limit %.0f s), %s", pass ? "PASS" : "FAIL", cr.number, cr.name,
                seconds, cr.limit_seconds, checker.summary().c_str());
    if (!error.empty()) std::printf("\n      exception: %s", error.c_str());
    if (!in_time) std::printf("\n      over the time limit");
    std::printf("\n");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
