#include "symbiont/regulation.hpp"

namespace symbiont {

IncentiveRuleSet generate_regulation(const MCNet& g) {
  require_well_formed(g);
  const Coalition grand = g.universe().all();
  std::vector<Rule> rules;
  rules.reserve(g.size());
  for (const auto& r : g.rules())
    rules.push_back({r.positive, r.negative, r.applies_to(grand) ? Rational(0) : Rational(-r.value)});
  return {MCNet(g.universe(), std::move(rules), NetKind::Incentive)};
}

IncentiveRuleSet generate_policy_regulation(const Game& g, const Policy& policy) {
  if (!(g.universe() == policy.universe())) throw UniverseMismatch("policy and game universes differ");
  require_exclusive(policy);
  require_enumerable(g.size(), "generate_policy_regulation");
  const auto v = g.table();
  const Coalition grand = g.grand();
  std::vector<Rule> rules;
  for (Coalition s : coalitions_by_size(g.size())) {
    if (s.size() < 2 || policy.label(s) == PolicyLabel::Promoted) continue;
    if (v[s.bits()] == 0) continue;
    rules.push_back({s, grand - s, -v[s.bits()]});
  }
  return {MCNet(g.universe(), std::move(rules), NetKind::Incentive)};
}

namespace {

Game composed(const Game& base, const MCNet& incentives) {
  if (!(base.universe() == incentives.universe()))
    throw UniverseMismatch("incentive rules and game universes differ");
  for (const auto& v : validate(incentives))
    if (v.kind != RuleViolation::Kind::ZeroValue) throw ValidationError("malformed incentive net: " + v.message);
  return base + Game(incentives);
}

}  // namespace

CISNGame::CISNGame(Game base, IncentiveRuleSet incentives)
    : base_(std::move(base)), incentives_(std::move(incentives)), composed_(composed(base_, incentives_.net)) {}

CISNGame compose(const Game& base, const IncentiveRuleSet& incentives) { return CISNGame(base, incentives); }

EnforcementReport verify_enforcement(const CISNGame& cisn, const Policy& policy) {
  if (!(cisn.universe() == policy.universe())) throw UniverseMismatch("policy and game universes differ");
  require_exclusive(policy);
  require_enumerable(cisn.universe().size(), "verify_enforcement");

  const Game& c = cisn.game();
  EnforcementReport report;
  report.ok = true;
  for (Coalition s : policy.effective_promoted()) {
    if (s.size() < 2) continue;
    const Game sub = c.restrict_to(s);
    PromotedCheck check{s, c.value(s), check_implementable(sub), shapley(sub), false};
    check.ok = check.value > 0 && check.implementability.stable && check.implementability.fair_and_stable;
    report.ok = report.ok && check.ok;
    report.promoted.push_back(std::move(check));
  }
  for (Coalition s : policy.effective_prohibited()) {
    ProhibitedCheck check{s, c.value(s), core_feasible(c.restrict_to(s)).nonempty, false};
    check.unimplementable = check.value <= 0;
    report.ok = report.ok && check.unimplementable;
    report.prohibited.push_back(std::move(check));
  }
  return report;
}

}  // namespace symbiont
