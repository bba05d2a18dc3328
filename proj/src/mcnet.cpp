#include "symbiont/mcnet.hpp"

#include "symbiont/errors.hpp"

namespace symbiont {

MCNet MCNet::without_zero_rules() const {
  std::vector<Rule> kept;
  for (const auto& r : rules_)
    if (r.value != 0) kept.push_back(r);
  return MCNet(universe_, std::move(kept), kind_);
}

std::vector<std::size_t> applicable_rules(const MCNet& net, Coalition s) {
  net.universe().require(s);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < net.rules().size(); ++i)
    if (net.rules()[i].applies_to(s)) out.push_back(i);
  return out;
}

Rational value(const MCNet& net, Coalition s) {
  net.universe().require(s);
  Rational total(0);
  for (const auto& r : net.rules())
    if (r.applies_to(s)) total += r.value;
  return total;
}

std::vector<RuleViolation> validate(const MCNet& net) {
  std::vector<RuleViolation> out;
  const auto& u = net.universe();
  for (std::size_t i = 0; i < net.rules().size(); ++i) {
    const Rule& r = net.rules()[i];
    const std::string tag = "rule " + std::to_string(i);
    if (!u.contains(r.positive) || !u.contains(r.negative))
      out.push_back({i, RuleViolation::Kind::OutsideUniverse,
                     tag + ": references agent " +
                         std::to_string((r.positive | r.negative).span() - 1) + " outside a universe of " +
                         std::to_string(u.size()) + " agents"});
    if (r.positive.empty())
      out.push_back({i, RuleViolation::Kind::EmptyPositive, tag + ": positive pattern is empty"});
    if (r.positive.intersects(r.negative))
      out.push_back({i, RuleViolation::Kind::Overlap, tag + ": positive and negative patterns overlap"});
    if (net.kind() == NetKind::Basic && r.value == 0)
      out.push_back({i, RuleViolation::Kind::ZeroValue, tag + ": zero value in a basic net"});
  }
  return out;
}

void require_well_formed(const MCNet& net) {
  const auto report = validate(net);
  if (!report.empty()) throw ValidationError("malformed MC-net: " + report.front().message);
}

MCNet concat(const MCNet& a, const MCNet& b) {
  if (!(a.universe() == b.universe())) throw UniverseMismatch("cannot combine nets over different universes");
  std::vector<Rule> rules = a.rules();
  rules.insert(rules.end(), b.rules().begin(), b.rules().end());
  const NetKind kind =
      a.kind() == NetKind::Basic && b.kind() == NetKind::Basic ? NetKind::Basic : NetKind::Incentive;
  return MCNet(a.universe(), std::move(rules), kind);
}

MCNet restrict_net(const MCNet& net, Coalition members) {
  net.universe().require(members);
  std::vector<Rule> rules;
  for (const auto& r : net.rules()) {
    if (!r.positive.subset_of(members)) continue;
    rules.push_back({compress(r.positive, members), compress(r.negative & members, members), r.value});
  }
  return MCNet(net.universe().restricted(members), std::move(rules), net.kind());
}

}  // namespace symbiont
