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

#include "cli.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "CLI11.hpp"
#include "fairdiv/algorithms.hpp"
#include "fairdiv/audit.hpp"
#include "fairdiv/errors.hpp"
#include "fairdiv/gallery.hpp"
#include "fairdiv/json_io.hpp"
#include "fairdiv/maximin.hpp"
#include "fairdiv/measures.hpp"
#include "fairdiv/oracle.hpp"
#include "fairdiv/report_json.hpp"

namespace fairdiv::cli {
namespace {

namespace fs = std::filesystem;

// Validation failure raised by the CLI layer itself.
class UsageError : public std::runtime_error {
 public:
  UsageError(std::string field, const std::string& message) : std::runtime_error(message), field_(std::move(field)) {}
  [[nodiscard]] const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

std::string render(const Json& doc) { return doc.dump(2) + "\n"; }

Json error_doc(std::string_view kind, const std::string& field, const std::string& message) {
  Json err = Json::object();
  err["kind"] = kind;
  if (!field.empty()) err["field"] = field;
  err["message"] = message;
  return Json{{"error", std::move(err)}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError(path, "cannot read file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError(path.string(), "cannot write file");
  out << text;
}

Params parse_params(const std::vector<std::string>& items) {
  Params params;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("param", "expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    if (params.count(key) > 0) throw UsageError("param", "'" + key + "' given twice");
    params[key] = parse_valuation(item.substr(eq + 1), key);
  }
  return params;
}

struct Loaded {
  Instance instance;
  std::optional<Construction> construction;
};

// A path to an instance document, or else a gallery id.
Loaded load_instance(const std::string& source, const std::vector<std::string>& params) {
  if (fs::is_regular_file(source)) {
    if (!params.empty()) throw UsageError("param", "--param applies to gallery entries only");
    return Loaded{parse_instance(read_file(source)), std::nullopt};
  }
  if (find_entry(source) != nullptr) {
    Construction c = build(source, parse_params(params));
    Instance instance = c.instance;
    return Loaded{std::move(instance), std::move(c)};
  }
  throw UsageError("instance", "'" + source + "' is neither a file nor a gallery entry");
}

Allocation resolve_allocation(const Loaded& loaded, const std::string& path, const std::string& scenario) {
  if (!path.empty()) {
    if (!scenario.empty()) throw UsageError("scenario", "give either an allocation file or --scenario");
    return parse_allocation(read_file(path), loaded.instance);
  }
  if (!loaded.construction) throw UsageError("allocation", "an allocation file is required");
  for (const auto& s : loaded.construction->scenarios) {
    if (scenario.empty() || s.name == scenario) return s.allocation;
  }
  throw UsageError("scenario", "no scenario '" + scenario + "'");
}

std::size_t to_size(const std::string& text, const std::string& field) {
  std::size_t value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw UsageError(field, "expected a non-negative integer, got '" + text + "'");
  }
  return value;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text, const std::string& field) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const std::size_t v = to_size(text, field);
    return {v, v};
  }
  const std::size_t lo = to_size(text.substr(0, dots), field);
  const std::size_t hi = to_size(text.substr(dots + 2), field);
  if (lo > hi) throw UsageError(field, "empty range '" + text + "'");
  return {lo, hi};
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string::size_type start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

Notion notion_arg(const std::string& text) {
  auto notion = parse_notion(text);
  if (!notion) throw UsageError("notion", "unknown notion '" + text + "' (ef, ef1, efx, mms, pmms)");
  return *notion;
}

std::vector<GoodIndex> range_of_goods(std::size_t m) {
  std::vector<GoodIndex> goods(m);
  for (GoodIndex g = 0; g < m; ++g) goods[g] = g;
  return goods;
}

AgentIndex agent_arg(std::size_t agent, const Instance& instance) {
  if (agent < 1 || agent > instance.agent_count()) {
    throw UsageError("agent", "agents are numbered 1 to " + std::to_string(instance.agent_count()));
  }
  return agent - 1;
}

Json with_decimal(Json doc, const Ratio& ratio, bool decimal) {
  doc["ratio"] = to_json(ratio);
  if (decimal) doc["decimal"] = ratio.to_decimal();
  return doc;
}

struct Assertion {
  Notion notion;
  Rational alpha;
  std::string text;
};

Assertion parse_assertion(const std::string& text) {
  const auto ge = text.find(">=");
  if (ge == std::string::npos) throw UsageError("assert", "expected notion>=alpha, got '" + text + "'");
  return Assertion{notion_arg(text.substr(0, ge)), parse_valuation(text.substr(ge + 2), "assert"), text};
}

// ---- eval -------------------------------------------------------------

struct EvalArgs {
  std::string instance;
  std::string allocation;
  std::string scenario;
  std::vector<std::string> params;
  std::vector<std::string> asserts;
  bool decimal = false;
  bool no_pairs = false;
  bool strict_efx = false;
};

CommandResult cmd_eval(const EvalArgs& args) {
  std::vector<Assertion> assertions;
  for (const auto& a : args.asserts) assertions.push_back(parse_assertion(a));
  Loaded loaded = load_instance(args.instance, args.params);
  Allocation allocation = resolve_allocation(loaded, args.allocation, args.scenario);
  allocation.check_against(loaded.instance);

  EvalOptions options;
  options.strict_efx = args.strict_efx;
  FairnessReport report = full_report(loaded.instance, allocation, options);

  Json doc = Json::object();
  if (!loaded.instance.name().empty()) doc["instance"] = loaded.instance.name();
  doc["allocation"] = to_json(allocation)["bundles"];
  doc["report"] = to_json(report, ReportJsonOptions{args.decimal, !args.no_pairs});

  CommandResult result;
  if (!assertions.empty()) {
    Json checks = Json::array();
    for (const auto& a : assertions) {
      const Ratio& ratio = report.aggregate(a.notion);
      const bool holds = ratio.satisfies(a.alpha);
      checks.push_back({{"assert", a.text}, {"ratio", to_json(ratio)}, {"holds", holds}});
      if (!holds) {
        result.exit_code = kExitFailure;
        result.stderr_text += "assertion failed: " + a.text + " (ratio " + ratio.to_string() + ")\n";
      }
    }
    doc["assertions"] = std::move(checks);
  }
  result.stdout_text = render(doc);
  return result;
}

// ---- solve ------------------------------------------------------------

struct SolveArgs {
  std::string instance;
  std::string algorithm;
  std::string order;
  std::vector<std::string> params;
  bool decimal = false;
  bool no_pairs = false;
};

CommandResult cmd_solve(const SolveArgs& args) {
  Loaded loaded = load_instance(args.instance, args.params);
  const Instance& instance = loaded.instance;
  Json doc = Json::object();
  doc["algorithm"] = args.algorithm;
  std::optional<Allocation> allocation;

  if (args.algorithm == "round-robin") {
    std::vector<AgentIndex> order;
    if (!args.order.empty()) {
      for (const auto& item : split(args.order, ',')) order.push_back(agent_arg(to_size(item, "order"), instance));
    }
    allocation = round_robin(instance, order);
  } else {
    if (!args.order.empty()) throw UsageError("order", "--order applies to round-robin only");
    CommonOrder common = detect_common_order(instance);
    if (!common.valid) {
      doc["error"] = error_doc("precondition violated", "instance",
                               "agents do not share a common ranking of the goods")["error"];
      return CommandResult{kExitFailure, render(doc), "ordered-efx: no common order of goods exists\n"};
    }
    OrderedEfxStats stats;
    allocation = ordered_efx(instance, common, &stats);
    Json order = Json::array();
    for (GoodIndex g : common.order) order.push_back(g);
    doc["common_order"] = std::move(order);
    doc["rotations"] = stats.rotations;
  }
  doc["allocation"] = to_json(*allocation)["bundles"];
  doc["report"] = to_json(full_report(instance, *allocation), ReportJsonOptions{args.decimal, !args.no_pairs});
  return CommandResult{kExitOk, render(doc), {}};
}

// ---- audit ------------------------------------------------------------

struct AuditArgs {
  std::vector<std::string> rules;
  bool all = false;
  bool exhaustive = false;
  std::optional<std::size_t> trials;
  std::string n;
  std::string m;
  std::string values;
  std::uint64_t seed = 0;
  std::string alphas;
  std::vector<std::string> gallery;
  std::size_t threads = 0;
  bool timing = false;
  bool strict_efx = false;
};

CommandResult cmd_audit(const AuditArgs& args) {
  if (args.all == !args.rules.empty()) throw UsageError("rule", "give --rule ID (repeatable) or --all");
  if (args.exhaustive && !args.gallery.empty()) throw UsageError("gallery", "--gallery and --exhaustive conflict");

  std::vector<const ImplicationRule*> rules;
  if (!args.all) {
    for (const auto& id : args.rules) {
      const ImplicationRule* rule = find_rule(id);
      if (rule == nullptr) throw UsageError("rule", "unknown rule '" + id + "'");
      rules.push_back(rule);
    }
  }

  AuditSpace space = args.exhaustive ? AuditSpace::exhaustive_default() : AuditSpace::random_default();
  if (!args.n.empty()) std::tie(space.n_min, space.n_max) = parse_range(args.n, "n");
  if (!args.m.empty()) std::tie(space.m_min, space.m_max) = parse_range(args.m, "m");
  if (!args.values.empty()) {
    auto [lo, hi] = parse_range(args.values, "values");
    space.value_min = static_cast<std::int64_t>(lo);
    space.value_max = static_cast<std::int64_t>(hi);
  }
  if (space.n_min < 1) throw UsageError("n", "need at least one agent");
  if (args.trials) space.trials = *args.trials;
  space.seed = args.seed;
  space.threads = args.threads;
  space.eval.strict_efx = args.strict_efx;
  if (!args.alphas.empty()) {
    space.alphas.clear();
    for (const auto& a : split(args.alphas, ',')) {
      Rational alpha = parse_valuation(a, "alphas");
      if (alpha.is_zero()) throw UsageError("alphas", "alpha must be positive");
      space.alphas.push_back(alpha);
    }
  }
  if (!args.gallery.empty()) {
    space.kind = SpaceKind::instances;
    for (const auto& id : args.gallery) space.instances.push_back(build(id).instance);
  }

  // --all keeps the rules that apply to some n in the space.
  if (args.all) {
    for (const auto& rule : rule_catalog()) {
      if (space.kind == SpaceKind::instances || !applicable_agents(rule, space).empty()) rules.push_back(&rule);
    }
    if (rules.empty()) throw Error(ErrorKind::rule_inapplicable, "n", "no rule applies to the requested n");
  }

  std::vector<AuditReport> reports = run_audit(rules, space);
  Json list = Json::array();
  bool passed = true;
  std::string diagnostics;
  for (const auto& r : reports) {
    passed = passed && r.passed();
    if (!r.passed()) diagnostics += r.rule_id + ": " + std::to_string(r.violation_count) + " violations\n";
    list.push_back(to_json(r, args.timing));
  }
  Json doc = Json::object();
  doc["passed"] = passed;
  doc["reports"] = std::move(list);
  return CommandResult{passed ? kExitOk : kExitFailure, render(doc), diagnostics};
}

// ---- gallery ----------------------------------------------------------

CommandResult cmd_gallery_list() {
  Json entries = Json::array();
  for (const auto& e : list_entries()) entries.push_back(to_json(e));
  return CommandResult{kExitOk, render(Json{{"entries", std::move(entries)}}), {}};
}

Json params_json(const Params& params) {
  Json doc = Json::object();
  for (const auto& [k, v] : params) doc[k] = v.to_string();
  return doc;
}

CommandResult cmd_gallery_emit(const std::string& id, const std::vector<std::string>& params,
                               const std::string& out) {
  if (find_entry(id) == nullptr) throw Error(ErrorKind::unknown_entry, "id", "no gallery entry '" + id + "'");
  Construction c = build(id, parse_params(params));
  const fs::path dir(out.empty() ? "." : out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw UsageError(dir.string(), "cannot create directory: " + ec.message());

  Json files = Json::array();
  auto emit = [&](const std::string& name, const std::string& text) {
    write_file(dir / name, text);
    files.push_back((dir / name).string());
  };
  emit("instance.json", serialize(c.instance));
  Json expected_all = Json::object();
  for (std::size_t s = 0; s < c.scenarios.size(); ++s) {
    const Scenario& scenario = c.scenarios[s];
    const std::string suffix = s == 0 ? "" : "-" + scenario.name;
    Json expected = Json::object();
    expected["id"] = c.id;
    expected["scenario"] = scenario.name;
    expected["params"] = params_json(c.params);
    expected["expected"] = expected_to_json(scenario);
    if (!c.note.empty()) expected["note"] = c.note;
    emit("allocation" + suffix + ".json", serialize(scenario.allocation));
    emit("expected" + suffix + ".json", render(expected));
    expected_all[scenario.name] = expected_to_json(scenario);
  }
  Json doc = Json::object();
  doc["id"] = c.id;
  doc["params"] = params_json(c.params);
  doc["files"] = std::move(files);
  doc["expected"] = std::move(expected_all);
  return CommandResult{kExitOk, render(doc), {}};
}

// ---- oracle -----------------------------------------------------------

struct OracleArgs {
  std::string instance;
  std::vector<std::string> params;
  std::string notion;
  std::string alpha;
  std::size_t agent = 0;
  std::optional<std::size_t> k;
  std::string goods;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  bool decimal = false;
};

CommandResult cmd_oracle_best(const OracleArgs& args) {
  const Notion notion = notion_arg(args.notion);
  Loaded loaded = load_instance(args.instance, args.params);
  BestAlpha best = best_alpha(loaded.instance, notion);
  Json doc = Json::object();
  doc["notion"] = to_string(notion);
  doc = with_decimal(std::move(doc), best.ratio, args.decimal);
  doc["allocation"] = to_json(best.allocation)["bundles"];
  return CommandResult{kExitOk, render(doc), {}};
}

CommandResult cmd_oracle_exists(const OracleArgs& args) {
  const Notion notion = notion_arg(args.notion);
  if (args.alpha.empty()) throw UsageError("alpha", "--alpha is required");
  const Rational alpha = parse_valuation(args.alpha, "alpha");
  Loaded loaded = load_instance(args.instance, args.params);
  std::optional<Allocation> found = exact_fair_search(loaded.instance, notion, alpha);
  Json doc = Json::object();
  doc["notion"] = to_string(notion);
  doc["alpha"] = alpha.to_string();
  doc["exists"] = found.has_value();
  if (!found) {
    return CommandResult{kExitFailure, render(doc), "no allocation reaches " + args.notion + " >= " + args.alpha + "\n"};
  }
  doc["witness"] = to_json(*found)["bundles"];
  doc = with_decimal(std::move(doc), full_report(loaded.instance, *found).aggregate(notion), args.decimal);
  return CommandResult{kExitOk, render(doc), {}};
}

CommandResult cmd_oracle_mms(const OracleArgs& args) {
  Loaded loaded = load_instance(args.instance, args.params);
  const Instance& instance = loaded.instance;
  MmsQuery query;
  query.agent = agent_arg(args.agent, instance);
  query.parts = args.k.value_or(instance.agent_count());
  if (query.parts < 1) throw UsageError("k", "k must be at least 1");
  if (!args.goods.empty()) {
    for (const auto& item : split(args.goods, ',')) {
      const std::size_t g = to_size(item, "goods");
      if (g >= instance.good_count()) throw UsageError("goods", "good index " + item + " out of range");
      query.goods.push_back(g);
    }
  } else {
    query.goods = range_of_goods(instance.good_count());
  }
  MmsResult mms = maximin_share(instance, query);
  Json doc = Json::object();
  doc["agent"] = args.agent;
  doc["k"] = query.parts;
  doc["value"] = mms.value.to_string();
  if (args.decimal) doc["decimal"] = mms.value.to_decimal(15);
  doc["partition"] = mms.partition;
  return CommandResult{kExitOk, render(doc), {}};
}

CommandResult cmd_oracle_monotonicity(const OracleArgs& args) {
  Loaded loaded = load_instance(args.instance, args.params);
  const AgentIndex agent = agent_arg(args.agent, loaded.instance);
  MonotonicityReport report = check_monotonicity(loaded.instance, agent, args.trials, args.seed);
  Json doc = Json::object();
  doc["agent"] = args.agent;
  doc["share"] = report.share.to_string();
  doc["partition"] = report.partition;
  doc["checks"] = report.checks;
  doc["passed"] = report.passed;
  Json bad = Json::array();
  for (const auto& c : report.counterexamples) bad.push_back({{"removed", c.removed}, {"reduced", c.reduced.to_string()}});
  doc["counterexamples"] = std::move(bad);
  return CommandResult{report.passed ? kExitOk : kExitFailure, render(doc),
                       report.passed ? "" : "monotonicity failed\n"};
}

CommandResult usage_error(const std::string& field, const std::string& message) {
  return CommandResult{kExitUsage, render(error_doc("usage", field, message)), "error: " + message + "\n"};
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  CLI::App app{"Exact fairness ratios, allocation algorithms and implication audits", "fairdiv"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "evaluate the fairness ratios of an allocation");
  eval->add_option("instance", eval_args.instance, "instance file or gallery id")->required();
  eval->add_option("allocation", eval_args.allocation, "allocation file");
  eval->add_option("--scenario", eval_args.scenario, "gallery allocation to evaluate");
  eval->add_option("--param", eval_args.params, "gallery parameter key=value");
  eval->add_option("--assert", eval_args.asserts, "notion>=alpha; exit 1 if unmet");
  eval->add_flag("--decimal", eval_args.decimal, "add 15-digit decimal approximations");
  eval->add_flag("--no-pairs", eval_args.no_pairs, "omit the per-pair table");
  eval->add_flag("--strict-efx", eval_args.strict_efx, "EFX removes any good, including zero-valued ones");

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "run an allocation algorithm");
  solve->add_option("instance", solve_args.instance, "instance file or gallery id")->required();
  solve->add_option("--algorithm", solve_args.algorithm)
      ->required()
      ->check(CLI::IsMember({"round-robin", "ordered-efx"}));
  solve->add_option("--order", solve_args.order, "round-robin agent order, e.g. 2,1,3");
  solve->add_option("--param", solve_args.params, "gallery parameter key=value");
  solve->add_flag("--decimal", solve_args.decimal);
  solve->add_flag("--no-pairs", solve_args.no_pairs);

  AuditArgs audit_args;
  auto* audit = app.add_subcommand("audit", "check implication rules on a space of instances");
  audit->add_option("--rule", audit_args.rules, "rule id (repeatable)");
  audit->add_flag("--all", audit_args.all, "every catalog rule that applies to the space");
  auto* exhaustive = audit->add_flag("--exhaustive", audit_args.exhaustive, "enumerate all small instances");
  audit->add_option("--trials", audit_args.trials, "random instances per rule")->excludes(exhaustive);
  audit->add_option("--n", audit_args.n, "agents, a or a..b");
  audit->add_option("--m", audit_args.m, "goods, a or a..b");
  audit->add_option("--values", audit_args.values, "integer values, a..b");
  audit->add_option("--seed", audit_args.seed);
  audit->add_option("--alphas", audit_args.alphas, "comma-separated premise levels");
  audit->add_option("--gallery", audit_args.gallery, "audit gallery instances (repeatable)");
  audit->add_option("--threads", audit_args.threads, "worker threads, 0 for all cores");
  audit->add_flag("--timing", audit_args.timing, "include elapsed seconds");
  audit->add_flag("--strict-efx", audit_args.strict_efx);

  auto* gallery = app.add_subcommand("gallery", "named constructions");
  gallery->require_subcommand(1);
  gallery->add_subcommand("list", "list entries and parameters");
  std::string emit_id;
  std::string emit_out;
  std::vector<std::string> emit_params;
  auto* emit = gallery->add_subcommand("emit", "write instance.json, allocation.json and expected.json");
  emit->add_option("id", emit_id)->required();
  emit->add_option("--param", emit_params, "key=value");
  emit->add_option("--out", emit_out, "output directory");

  OracleArgs oracle_args;
  auto* oracle = app.add_subcommand("oracle", "brute-force and exact queries");
  oracle->require_subcommand(1);
  auto common = [&](CLI::App* sub) {
    sub->add_option("instance", oracle_args.instance, "instance file or gallery id")->required();
    sub->add_option("--param", oracle_args.params, "gallery parameter key=value");
    sub->add_flag("--decimal", oracle_args.decimal);
  };
  auto* best = oracle->add_subcommand("best-alpha", "best achievable ratio over all allocations");
  common(best);
  best->add_option("--notion", oracle_args.notion)->required();
  auto* exists = oracle->add_subcommand("exists", "find an allocation meeting notion >= alpha");
  common(exists);
  exists->add_option("--notion", oracle_args.notion)->required();
  exists->add_option("--alpha", oracle_args.alpha)->required();
  auto* mms = oracle->add_subcommand("mms", "maximin share of one agent");
  common(mms);
  mms->add_option("--agent", oracle_args.agent, "1-based agent")->required();
  mms->add_option("--k", oracle_args.k, "number of parts (default: agents)");
  mms->add_option("--goods", oracle_args.goods, "comma-separated good indices (default: all)");
  auto* mono = oracle->add_subcommand("monotonicity", "check removal of a bundle subset with one agent fewer");
  common(mono);
  mono->add_option("--agent", oracle_args.agent, "1-based agent")->required();
  mono->add_option("--trials", oracle_args.trials, "random subsets to try");
  mono->add_option("--seed", oracle_args.seed);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return CommandResult{kExitOk, app.help(), {}};
  } catch (const CLI::CallForAllHelp&) {
    return CommandResult{kExitOk, app.help("", CLI::AppFormatMode::All), {}};
  } catch (const CLI::ParseError& e) {
    return usage_error("", e.what());
  }

  try {
    if (*eval) return cmd_eval(eval_args);
    if (*solve) return cmd_solve(solve_args);
    if (*audit) return cmd_audit(audit_args);
    if (*gallery) {
      if (*emit) return cmd_gallery_emit(emit_id, emit_params, emit_out);
      return cmd_gallery_list();
    }
    if (*best) return cmd_oracle_best(oracle_args);
    if (*exists) return cmd_oracle_exists(oracle_args);
    if (*mms) return cmd_oracle_mms(oracle_args);
    return cmd_oracle_monotonicity(oracle_args);
  } catch (const UsageError& e) {
    return usage_error(e.field(), e.what());
  } catch (const Error& e) {
    return CommandResult{kExitUsage, render(error_doc(to_string(e.kind()), e.field(), e.what())),
                         "error: " + std::string(e.what()) + "\n"};
  }
}

}  // namespace fairdiv::cli
