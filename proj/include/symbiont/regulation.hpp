#pragma once

#include "symbiont/game.hpp"
#include "symbiont/policy.hpp"
#include "symbiont/solution.hpp"

#include <vector>

namespace symbiont {

/// Tax (negative) and subsidy (positive) rules over the game's universe.
/// Zero-valued rules are allowed.
struct IncentiveRuleSet {
  MCNet net;
};

/// Taxes every rule of `g` that does not apply to the grand coalition by its
/// negated value; rules that apply to the grand coalition are kept at 0.
/// Output rule i mirrors input rule i.
IncentiveRuleSet generate_regulation(const MCNet& g);

/// For every coalition S with |S| >= 2 that is not promoted and has v(S) != 0,
/// emits (S, N \ S) -> -v(S), ordered by size then canonically. Requires an
/// exclusive policy over the game's universe.
IncentiveRuleSet generate_policy_regulation(const Game& g, const Policy& policy);

/// Base game plus incentive rules: c(S) = v(S) + iota(S).
class CISNGame {
 public:
  CISNGame(Game base, IncentiveRuleSet incentives);

  const Game& base() const { return base_; }
  const IncentiveRuleSet& incentives() const { return incentives_; }
  /// The composed game (N, c).
  const Game& game() const { return composed_; }
  const Universe& universe() const { return base_.universe(); }

  Rational value(Coalition s) const { return composed_.value(s); }
  Rational incentive(Coalition s) const { return symbiont::value(incentives_.net, s); }

 private:
  Game base_;
  IncentiveRuleSet incentives_;
  Game composed_;
};

CISNGame compose(const Game& base, const IncentiveRuleSet& incentives);

struct PromotedCheck {
  Coalition coalition;
  Rational value;  ///< c(S)
  Implementability implementability;
  Allocation shapley;  ///< of the sub-game, indexed by the coalition's members
  /// Stable, fair and offering a strictly positive composed value.
  bool ok = false;
};

struct ProhibitedCheck {
  Coalition coalition;
  Rational value;  ///< c(S)
  bool core_nonempty = false;
  /// c(S) <= 0: no strict gain over staying apart.
  bool unimplementable = false;
};

struct EnforcementReport {
  std::vector<PromotedCheck> promoted;
  std::vector<ProhibitedCheck> prohibited;
  bool ok = false;
};

/// Checks each promoted coalition (size >= 2) on the sub-game of c restricted
/// to its members, and each prohibited coalition (listed, or unlisted under a
/// prohibited default) for the absence of a strictly positive composed value.
EnforcementReport verify_enforcement(const CISNGame& cisn, const Policy& policy);

}  // namespace symbiont
