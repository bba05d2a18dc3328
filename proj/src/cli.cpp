#include "symbiont/cli.hpp"

#include "symbiont/balanced.hpp"
#include "symbiont/generators.hpp"
#include "symbiont/io.hpp"
#include "symbiont/redistribution.hpp"
#include "symbiont/regulation.hpp"
#include "symbiont/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>

namespace symbiont::cli {

namespace {

using io::Json;
using report::Report;

struct Options {
  std::string format = "text";
  bool approx = false;
  bool timestamps = false;
  std::string game;
  std::string policy;
  std::string evidence;
  std::string incentives;
  std::string output;
  std::string coalition;
  std::string alloc;
  std::string method = "both";
  std::string tau;
  bool keep_zero = false;
  std::uint64_t seed = 1;
  int rounds = 20;
};

struct Loaded {
  io::GameDocument doc;
  Game game;
};

/// Restores the enumeration cap when a run ends.
class CapGuard {
 public:
  CapGuard() : saved_(enumeration_cap()) {}
  ~CapGuard() { set_enumeration_cap(saved_); }
  CapGuard(const CapGuard&) = delete;
  CapGuard& operator=(const CapGuard&) = delete;

 private:
  std::size_t saved_;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Loaded load_game(const std::string& path) {
  auto doc = io::parse_game(io::read_json_file(path));
  Game game = doc.to_game();
  return {std::move(doc), std::move(game)};
}

Policy load_policy(const std::string& path, const Universe& universe) {
  if (path.empty()) throw UsageError("--policy is required");
  return io::parse_policy(io::read_json_file(path), universe);
}

EvidenceSet load_evidence(const std::string& path, const Universe& universe) {
  if (path.empty()) throw UsageError("--evidence is required");
  return io::parse_evidence(io::read_json_file(path), universe);
}

IncentiveRuleSet load_incentives(const std::string& path, const Universe& universe) {
  if (path.empty()) throw UsageError("--incentives is required");
  const auto doc = io::parse_game(io::read_json_file(path));
  const auto* net = std::get_if<MCNet>(&doc.backing);
  if (!net) throw ParseError("", path + ": an incentive file must hold an \"mcnet\"");
  if (!(net->universe() == universe)) throw UniverseMismatch("incentive net universe differs from the game universe");
  return IncentiveRuleSet{*net};
}

Coalition parse_coalition_arg(const std::string& text, const Universe& universe) {
  Coalition s;
  if (text.empty() || text == "{}") return s;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto name = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const auto id = universe.find(name);
    if (!id) throw InvalidCoalition("unknown agent \"" + name + "\"");
    s = s.with(*id);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return s;
}

Allocation parse_allocation_arg(const std::string& text, std::size_t n) {
  std::vector<Rational> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    parts.push_back(parse_rational(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (parts.size() != n)
    throw ValidationError("--alloc has " + std::to_string(parts.size()) + " entries for " + std::to_string(n) +
                          " agents");
  Allocation x(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) x(static_cast<Eigen::Index>(i)) = parts[i];
  return x;
}

Json coalition_list(const Universe& u, const std::vector<Coalition>& list) {
  Json out = Json::array();
  for (Coalition s : list) out.push_back(io::coalition_json(u, s));
  return out;
}

Json rule_list(const MCNet& net) {
  Json out = Json::array();
  for (const auto& r : net.rules()) out.push_back(report::rule_string(net.universe(), r));
  return out;
}

/// Writes the document to --output when given, otherwise embeds it.
void attach_document(Report& rep, const Options& o, const Json& doc) {
  if (o.output.empty()) {
    rep["document"] = doc;
    return;
  }
  std::ofstream file(o.output);
  if (!file) throw ValidationError("cannot write " + o.output);
  file << io::dump(doc);
  rep["output"] = o.output;
}

const char* backing_name(const io::GameDocument& doc) {
  if (std::holds_alternative<CostTable>(doc.backing)) return "costs";
  if (std::holds_alternative<ValueMap>(doc.backing)) return "values";
  return "mcnet";
}

int cmd_validate(const Options& o, Report& rep) {
  auto doc = io::parse_game(io::read_json_file(o.game));
  const Universe& u = doc.universe;
  rep["agents"] = u.size();
  rep["backing"] = backing_name(doc);
  bool valid = true;
  std::optional<Game> game;
  try {
    game = doc.to_game();
  } catch (const SuperadditivityViolation& e) {
    valid = false;
    rep["problems"].push_back(e.what());
  } catch (const ValidationError& e) {
    valid = false;
    rep["problems"].push_back(e.what());
  }
  if (game && u.size() <= enumeration_cap()) {
    const auto witness = check_superadditive(*game);
    rep["superadditive"] = !witness.has_value();
    if (witness) rep["superadditivity_witness"] = coalition_list(u, {witness->first, witness->second});
    if (!witness && u.size() >= 2) rep["isn_class"] = to_string(classify(*game));
  }
  if (!o.policy.empty()) {
    const Policy policy = load_policy(o.policy, u);
    const auto overlap = check_mutual_exclusivity(policy);
    rep["policy_exclusive"] = !overlap.has_value();
    if (overlap) {
      valid = false;
      rep["problems"].push_back("promoted coalitions " + u.label(overlap->first) + " and " +
                                u.label(overlap->second) + " overlap");
    }
  }
  if (!o.evidence.empty()) rep["evidence_coalitions"] = load_evidence(o.evidence, u).realized().size();
  rep["valid"] = valid;
  return valid ? kExitOk : kExitNegative;
}

int cmd_value(const Options& o, Report& rep) {
  const auto [doc, game] = load_game(o.game);
  const Coalition s = parse_coalition_arg(o.coalition, game.universe());
  rep["coalition"] = io::coalition_json(game.universe(), s);
  rep["value"] = rep.number(game.value(s));
  return kExitOk;
}

int cmd_shapley(const Options& o, Report& rep) {
  const auto [doc, game] = load_game(o.game);
  const Universe& u = game.universe();
  std::optional<Allocation> by_rules, by_orders;
  if (o.method == "both" || o.method == "mcnet")
    by_rules = shapley_mcnet(game.mcnet() ? *game.mcnet() : to_mcnet(game));
  if (o.method == "both" || o.method == "permutation") by_orders = shapley_permutation(game);
  if (by_rules) rep["mcnet"] = rep.allocation(u, *by_rules);
  if (by_orders) rep["permutation"] = rep.allocation(u, *by_orders);
  if (by_rules && by_orders) {
    const bool agree = *by_rules == *by_orders;
    rep["agree"] = agree;
    if (!agree) return kExitNegative;
  }
  return kExitOk;
}

int cmd_core(const Options& o, Report& rep) {
  const auto [doc, game] = load_game(o.game);
  const Universe& u = game.universe();
  if (!o.alloc.empty()) {
    const Allocation x = parse_allocation_arg(o.alloc, u.size());
    const auto violation = core_membership(game, x);
    rep["allocation"] = rep.allocation(u, x);
    rep["member"] = !violation.has_value();
    if (!violation) return kExitOk;
    const bool eff = violation->kind == CoreViolation::Kind::Efficiency;
    rep["violation"] = {{"kind", eff ? "efficiency" : "rationality"},
                        {"coalition", io::coalition_json(u, violation->coalition)},
                        {"deficit", rep.number(violation->deficit)},
                        {"constraint", report::constraint_string(u, violation->coalition, eff,
                                                                 game.value(violation->coalition))}};
    return kExitNegative;
  }
  const CoreVerdict verdict = core_feasible(game);
  rep["core"] = verdict.nonempty ? "nonempty" : "empty";
  if (verdict.nonempty) {
    rep["witness"] = rep.allocation(u, *verdict.witness);
    return kExitOk;
  }
  Json rows = Json::array();
  for (const auto& term : verdict.certificate) {
    rows.push_back({{"constraint", report::constraint_string(u, term.coalition, term.efficiency,
                                                             game.value(term.coalition))},
                    {"multiplier", rep.number(term.multiplier)}});
  }
  rep["certificate"] = rows;
  rep["conclusion"] = "weighted sum gives 0 >= " + to_string(verdict.gap);
  return kExitNegative;
}

int cmd_balanced(const Options& o, Report& rep) {
  const auto [doc, game] = load_game(o.game);
  const Universe& u = game.universe();
  const bool balanced = is_balanced(game);
  rep["balanced"] = balanced;
  if (!balanced && u.size() <= kVertexEnumerationCap) {
    if (const auto lambda = violating_balanced_vector(game)) {
      Json weights = Json::array();
      for (const auto& [s, w] : lambda->weights)
        weights.push_back({{"coalition", io::coalition_json(u, s)}, {"weight", rep.number(w)}});
      rep["violating_vector"] = weights;
      rep["excess"] = rep.number(balanced_excess(game, *lambda));
    }
  }
  return balanced ? kExitOk : kExitNegative;
}

int cmd_supermodular(const Options& o, Report& rep) {
  const auto [doc, game] = load_game(o.game);
  const auto witness = is_supermodular(game);
  rep["supermodular"] = !witness.has_value();
  if (!witness) return kExitOk;
  rep["witness"] = coalition_list(game.universe(), {witness->first, witness->second});
  return kExitNegative;
}

int cmd_convert(const Options& o, Report& rep) {
  const auto [doc, game] = load_game(o.game);
  const MCNet net = game.mcnet() ? *game.mcnet() : to_mcnet(game);
  rep["rules"] = rule_list(net);
  attach_document(rep, o, io::emit_game(io::net_document(net)));
  return kExitOk;
}

int cmd_regulate(const Options& o, Report& rep) {
  const auto [doc, game] = load_game(o.game);
  IncentiveRuleSet rules;
  if (!o.policy.empty()) {
    rules = generate_policy_regulation(game, load_policy(o.policy, game.universe()));
    rep["method"] = "policy";
  } else {
    rules = generate_regulation(game.mcnet() ? *game.mcnet() : to_mcnet(game));
    rep["method"] = "grand-coalition";
  }
  if (!o.keep_zero) rules.net = rules.net.without_zero_rules();
  rep["rules"] = rule_list(rules.net);
  attach_document(rep, o, io::emit_game(io::net_document(rules.net)));
  return kExitOk;
}

int cmd_compose(const Options& o, Report& rep) {
  const auto [doc, game] = load_game(o.game);
  const CISNGame cisn = compose(game, load_incentives(o.incentives, game.universe()));
  attach_document(rep, o, io::emit_game(io::game_document(cisn.game())));
  return kExitOk;
}

int cmd_enforce(const Options& o, Report& rep) {
  const auto [doc, game] = load_game(o.game);
  const Universe& u = game.universe();
  const CISNGame cisn = compose(game, load_incentives(o.incentives, u));
  const EnforcementReport result = verify_enforcement(cisn, load_policy(o.policy, u));
  Json promoted = Json::array(), prohibited = Json::array();
  for (const auto& c : result.promoted) {
    Json shares = Json::object();
    const auto members = c.coalition.members();
    for (std::size_t k = 0; k < members.size(); ++k)
      shares[u.names()[members[k]]] = rep.number(c.shapley(static_cast<Eigen::Index>(k)));
    promoted.push_back({{"coalition", io::coalition_json(u, c.coalition)},
                        {"value", rep.number(c.value)},
                        {"stable", c.implementability.stable},
                        {"fair_and_stable", c.implementability.fair_and_stable},
                        {"shapley", shares},
                        {"ok", c.ok}});
  }
  for (const auto& c : result.prohibited)
    prohibited.push_back({{"coalition", io::coalition_json(u, c.coalition)},
                          {"value", rep.number(c.value)},
                          {"core_nonempty", c.core_nonempty},
                          {"unimplementable", c.unimplementable}});
  rep["promoted"] = promoted;
  rep["prohibited"] = prohibited;
  rep["ok"] = result.ok;
  return result.ok ? kExitOk : kExitNegative;
}

int cmd_comply(const Options& o, Report& rep) {
  const auto [doc, game] = load_game(o.game);
  const Universe& u = game.universe();
  const ComplianceResult result = compliance(load_evidence(o.evidence, u), load_policy(o.policy, u));
  rep["compliant"] = result.compliant;
  rep["missing"] = coalition_list(u, result.missing);
  rep["extra"] = coalition_list(u, result.extra);
  return result.compliant ? kExitOk : kExitNegative;
}

int cmd_tax(const Options& o, Report& rep) {
  const auto [doc, game] = load_game(o.game);
  const CISNGame cisn = compose(game, load_incentives(o.incentives, game.universe()));
  rep["tau"] = rep.number(collectible_tax(cisn, load_evidence(o.evidence, game.universe())));
  return kExitOk;
}

int cmd_redistribute(const Options& o, Report& rep) {
  const auto [doc, game] = load_game(o.game);
  const Universe& u = game.universe();
  const CISNGame cisn = compose(game, load_incentives(o.incentives, u));
  const EvidenceSet evidence = load_evidence(o.evidence, u);
  const Policy policy = load_policy(o.policy, u);
  const Rational tau = o.tau.empty() ? collectible_tax(cisn, evidence) : parse_rational(o.tau);
  const RedistributionResult r = redistribute(cisn, policy, evidence, tau);
  rep["omega"] = rep.allocation(u, r.omega);
  rep["tau"] = rep.number(r.tau);
  rep["residual"] = rep.number(r.residual);
  rep["implemented_promoted"] = coalition_list(u, r.implemented_promoted);
  rep["promoted_union"] = io::coalition_json(u, r.promoted_union);
  rep["union_value"] = rep.number(r.union_value);
  rep["union_shapley"] = rep.allocation(u, r.union_shapley);
  rep["cross_group_synergy"] = r.cross_group_synergy;
  rep["budget_balanced"] = r.omega.sum() + r.residual == r.tau;
  return kExitOk;
}

/// One randomised property per entry; each returns true when the instance passes.
int cmd_selftest(const Options& o, Report& rep) {
  gen::Rng rng(o.seed);
  auto agents = [](std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("a" + std::to_string(i));
    return Universe(std::move(names));
  };
  auto size = [&](int lo, int hi) { return static_cast<std::size_t>(std::uniform_int_distribution<int>(lo, hi)(rng)); };

  const std::vector<std::pair<std::string, std::function<bool()>>> properties = {
      {"shapley_methods_agree",
       [&] {
         const MCNet net = gen::mcnet(agents(size(1, 7)), size(1, 10), rng);
         return shapley_mcnet(net) == shapley_permutation(Game(net));
       }},
      {"shapley_efficient",
       [&] {
         const Game g = gen::arbitrary_game(agents(size(1, 6)), rng);
         return shapley(g).sum() == g.value(g.grand());
       }},
      {"two_agent_isn_supermodular_and_fair",
       [&] {
         const Game g = build_isn_game(gen::superadditive_costs(agents(2), rng));
         return !is_supermodular(g) && is_balanced(g) && !core_membership(g, shapley(g));
       }},
      {"core_matches_balanced_vectors",
       [&] {
         const Game g = gen::arbitrary_game(agents(size(1, 4)), rng);
         return core_feasible(g).nonempty == !violating_balanced_vector(g).has_value();
       }},
      {"mcnet_round_trip",
       [&] {
         const Game g = gen::superadditive_game(agents(size(1, 6)), rng);
         return same_values(g, Game(to_mcnet(g)));
       }},
      {"policy_regulation_enforces",
       [&] {
         const Universe u = agents(size(2, 6));
         const Game g = gen::superadditive_game(u, rng);
         const Policy p = gen::exclusive_policy(u, rng);
         return verify_enforcement(compose(g, generate_policy_regulation(g, p)), p).ok;
       }},
      {"redistribution_budget_balanced",
       [&] {
         const Universe u = agents(size(2, 6));
         const Game g = gen::superadditive_game(u, rng);
         const Policy p = gen::exclusive_policy(u, rng);
         const CISNGame cisn = compose(g, generate_policy_regulation(g, p));
         const EvidenceSet e = gen::realized_evidence(p, rng);
         const Rational tau = collectible_tax(cisn, e) + gen::positive_rational(rng);
         const auto r = redistribute(cisn, p, e, tau);
         return r.omega.sum() + r.residual == tau && (r.union_value == 0 || r.residual == 0);
       }},
  };

  bool all = true;
  Json results = Json::object();
  for (const auto& [name, check] : properties) {
    int failures = 0;
    for (int k = 0; k < o.rounds; ++k)
      if (!check()) ++failures;
    results[name] = failures;
    all = all && failures == 0;
  }
  rep["seed"] = o.seed;
  rep["rounds"] = o.rounds;
  rep["failures"] = results;
  rep["passed"] = all;
  return all ? kExitOk : kExitNegative;
}

using Command = int (*)(const Options&, Report&);

const std::map<std::string, Command>& commands() {
  static const std::map<std::string, Command> table = {
      {"validate", cmd_validate}, {"value", cmd_value},       {"shapley", cmd_shapley},
      {"core", cmd_core},         {"balanced", cmd_balanced}, {"supermodular", cmd_supermodular},
      {"convert", cmd_convert},   {"regulate", cmd_regulate}, {"compose", cmd_compose},
      {"enforce", cmd_enforce},   {"comply", cmd_comply},     {"tax", cmd_tax},
      {"redistribute", cmd_redistribute}, {"selftest", cmd_selftest},
  };
  return table;
}

/// First token that is neither an option nor the value of --format.
std::optional<std::string> command_token(const std::vector<std::string>& args) {
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (args[k] == "--format") {
      ++k;
      continue;
    }
    if (!args[k].empty() && args[k][0] == '-') continue;
    return args[k];
  }
  return std::nullopt;
}

void apply_agent_cap_from_env() {
  const char* raw = std::getenv("SYMBIONT_MAX_AGENTS");
  if (!raw) return;
  try {
    std::size_t used = 0;
    const std::string text(raw);
    const unsigned long cap = std::stoul(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    set_enumeration_cap(cap);
  } catch (const std::exception&) {
    throw UsageError(std::string("SYMBIONT_MAX_AGENTS must be an integer in [1, 30], got \"") + raw + "\"");
  }
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buffer;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CapGuard guard;
  Options o;
  CLI::App app{"Cooperative-game engine for industrial symbiotic networks", "symbiont"};
  app.fallthrough();
  app.require_subcommand(0, 1);
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--approx", o.approx, "Add six-decimal approximations next to exact rationals");
  app.add_flag("--timestamps", o.timestamps, "Add a UTC timestamp to the report");

  auto game_arg = [&](CLI::App* sub) { sub->add_option("game", o.game, "Game file (JSON)")->required(); };
  auto* validate = app.add_subcommand("validate", "Schema and model checks");
  game_arg(validate);
  validate->add_option("--policy", o.policy, "Policy file");
  validate->add_option("--evidence", o.evidence, "Evidence file");
  auto* value = app.add_subcommand("value", "Value of one coalition");
  game_arg(value);
  value->add_option("coalition", o.coalition, "Comma-separated agent names")->required();
  auto* shapley_cmd = app.add_subcommand("shapley", "Shapley value");
  game_arg(shapley_cmd);
  shapley_cmd->add_option("--method", o.method, "Computation method")
      ->check(CLI::IsMember({"both", "mcnet", "permutation"}));
  auto* core = app.add_subcommand("core", "Core feasibility, or membership with --alloc");
  game_arg(core);
  core->add_option("--alloc", o.alloc, "Comma-separated rationals, one per agent");
  game_arg(app.add_subcommand("balanced", "Bondareva-Shapley balancedness"));
  game_arg(app.add_subcommand("supermodular", "Supermodularity"));
  auto* convert = app.add_subcommand("convert", "Convert a cost or value table to an MC-net");
  game_arg(convert);
  convert->add_option("--output", o.output, "Write the document here");
  auto* regulate = app.add_subcommand("regulate", "Generate tax and subsidy rules");
  game_arg(regulate);
  regulate->add_option("--policy", o.policy, "Policy file");
  regulate->add_flag("--keep-zero", o.keep_zero, "Keep zero-valued rules");
  regulate->add_option("--output", o.output, "Write the incentive net here");
  auto* compose_cmd = app.add_subcommand("compose", "Base game plus incentive rules");
  game_arg(compose_cmd);
  compose_cmd->add_option("--incentives", o.incentives, "Incentive net file")->required();
  compose_cmd->add_option("--output", o.output, "Write the composed game here");
  auto* enforce = app.add_subcommand("enforce", "Check that incentives enforce a policy");
  game_arg(enforce);
  enforce->add_option("--incentives", o.incentives, "Incentive net file")->required();
  enforce->add_option("--policy", o.policy, "Policy file")->required();
  auto* comply = app.add_subcommand("comply", "Check evidence against a policy");
  game_arg(comply);
  comply->add_option("--policy", o.policy, "Policy file")->required();
  comply->add_option("--evidence", o.evidence, "Evidence file")->required();
  auto* tax = app.add_subcommand("tax", "Collectible tax for the realised coalitions");
  game_arg(tax);
  tax->add_option("--incentives", o.incentives, "Incentive net file")->required();
  tax->add_option("--evidence", o.evidence, "Evidence file")->required();
  auto* redistribute_cmd = app.add_subcommand("redistribute", "Redistribute collected tax");
  game_arg(redistribute_cmd);
  redistribute_cmd->add_option("--incentives", o.incentives, "Incentive net file")->required();
  redistribute_cmd->add_option("--policy", o.policy, "Policy file")->required();
  redistribute_cmd->add_option("--evidence", o.evidence, "Evidence file")->required();
  redistribute_cmd->add_option("--tau", o.tau, "Tax to redistribute (default: collectible tax)");
  auto* selftest = app.add_subcommand("selftest", "Randomised property checks");
  selftest->add_option("--seed", o.seed, "Generator seed");
  selftest->add_option("--rounds", o.rounds, "Instances per property")->check(CLI::PositiveNumber);

  const auto token = command_token(args);
  if (token && !commands().count(*token)) {
    err << "error: unknown command '" << *token << "'\n";
    return kExitInputError;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "usage error: " << e.what() << "\n";
    return kExitInputError;
  }
  if (app.get_subcommands().empty()) {
    err << "error: no command given\n" << app.help();
    return kExitInputError;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    apply_agent_cap_from_env();
    Report rep(o.approx);
    rep["command"] = name;
    const int code = commands().at(name)(o, rep);
    if (o.timestamps) rep["timestamp"] = utc_timestamp();
    out << rep.render(o.format == "json" ? report::Format::Json : report::Format::Text);
    return code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "invalid input: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << "\n";
  }
  return kExitInputError;
}

}  // namespace symbiont::cli
