#pragma once

#include "symbiont/coalition.hpp"
#include "symbiont/rational.hpp"

#include <string>
#include <vector>

namespace symbiont {

/// (positive, negative) -> value. The rule applies to S when S contains every
/// agent of `positive` and none of `negative`.
struct Rule {
  Coalition positive;
  Coalition negative;
  Rational value;

  bool applies_to(Coalition s) const { return positive.subset_of(s) && !negative.intersects(s); }
  friend bool operator==(const Rule&, const Rule&) = default;
};

/// Basic nets forbid zero-valued rules; incentive nets (tax/subsidy rule sets
/// and compositions containing them) allow them.
enum class NetKind { Basic, Incentive };

/// A marginal-contribution net: an ordered rule list over a universe.
class MCNet {
 public:
  MCNet() = default;
  MCNet(Universe universe, std::vector<Rule> rules, NetKind kind = NetKind::Basic)
      : universe_(std::move(universe)), rules_(std::move(rules)), kind_(kind) {}

  const Universe& universe() const { return universe_; }
  const std::vector<Rule>& rules() const { return rules_; }
  NetKind kind() const { return kind_; }
  std::size_t size() const { return rules_.size(); }

  /// Same net with zero-valued rules removed.
  MCNet without_zero_rules() const;

  friend bool operator==(const MCNet&, const MCNet&) = default;

 private:
  Universe universe_;
  std::vector<Rule> rules_;
  NetKind kind_ = NetKind::Basic;
};

/// Indices of rules applicable to `s`, ascending.
std::vector<std::size_t> applicable_rules(const MCNet& net, Coalition s);

/// Sum of the values of the applicable rules.
Rational value(const MCNet& net, Coalition s);

struct RuleViolation {
  enum class Kind { EmptyPositive, Overlap, OutsideUniverse, ZeroValue };
  std::size_t rule;
  Kind kind;
  std::string message;
};

/// Every violated rule invariant, in rule order. Empty iff the net is well formed.
std::vector<RuleViolation> validate(const MCNet& net);

/// Throws ValidationError carrying the first violation.
void require_well_formed(const MCNet& net);

/// Concatenation of two rule lists over the same universe. The value of the
/// result is the pointwise sum of the two games.
MCNet concat(const MCNet& a, const MCNet& b);

/// The net restricted to the agents in `members`, re-indexed onto the
/// sub-universe. Rules needing an absent agent are dropped; negative patterns
/// lose absent agents.
MCNet restrict_net(const MCNet& net, Coalition members);

}  // namespace symbiont
