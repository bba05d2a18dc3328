#pragma once

#include "symbiont/policy.hpp"
#include "symbiont/regulation.hpp"

#include <vector>

namespace symbiont {

/// The ISNs actually implemented. Coalitions are non-empty, inside the
/// universe and pairwise disjoint (an agent joins at most one realised ISN).
class EvidenceSet {
 public:
  /// Throws ValidationError on overlap, empty or out-of-universe coalitions.
  EvidenceSet(const Universe& universe, std::vector<Coalition> realized);

  const CoalitionSet& realized() const { return realized_; }
  std::size_t universe_size() const { return universe_size_; }

 private:
  CoalitionSet realized_;
  std::size_t universe_size_;
};

struct ComplianceResult {
  bool compliant = false;
  /// Promoted coalitions that were not realised.
  std::vector<Coalition> missing;
  /// Realised coalitions (size >= 2) that are not promoted.
  std::vector<Coalition> extra;
};

/// Compliant iff the realised coalitions of size >= 2 are exactly the promoted
/// coalitions of size >= 2.
ComplianceResult compliance(const EvidenceSet& evidence, const Policy& policy);

/// Sum of -iota(S) over realised coalitions whose incentive value is negative.
Rational collectible_tax(const CISNGame& cisn, const EvidenceSet& evidence);

struct RedistributionResult {
  /// Per-agent share of the collected tax.
  Allocation omega;
  Rational tau;
  /// Part of tau that was not distributed.
  Rational residual;
  /// Realised promoted coalitions and their union.
  std::vector<Coalition> implemented_promoted;
  Coalition promoted_union;
  /// v of the union in the base game.
  Rational union_value;
  /// Shapley value of the base sub-game on the union, full length (zero
  /// outside the union).
  Allocation union_shapley;
  /// Several groups whose union is worth more or less than the sum of their
  /// values: the weights then include cross-group synergies.
  bool cross_group_synergy = false;
};

/// Shapley-proportional redistribution of tau among the agents of realised
/// promoted coalitions: Omega_i = tau * Phi_i(union sub-game of the base game)
/// / v(union). When no promoted coalition was realised or v(union) = 0 the
/// whole of tau is kept as residual.
RedistributionResult redistribute(const CISNGame& cisn, const Policy& policy, const EvidenceSet& evidence,
                                  const Rational& tau);

}  // namespace symbiont
