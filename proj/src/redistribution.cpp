#include "symbiont/redistribution.hpp"

namespace symbiont {

EvidenceSet::EvidenceSet(const Universe& universe, std::vector<Coalition> realized)
    : universe_size_(universe.size()) {
  Coalition used;
  for (Coalition s : realized) {
    if (s.empty()) throw ValidationError("evidence contains the empty coalition");
    if (!universe.contains(s)) throw ValidationError("evidence coalition outside the universe");
    if (s.intersects(used))
      throw ValidationError("evidence coalitions overlap at " + universe.label(s & used));
    used = used | s;
    realized_.insert(s);
  }
}

ComplianceResult compliance(const EvidenceSet& evidence, const Policy& policy) {
  if (evidence.universe_size() != policy.universe().size())
    throw UniverseMismatch("evidence and policy universes differ");
  ComplianceResult out;
  const auto promoted = policy.effective_promoted();
  for (Coalition s : promoted)
    if (s.size() >= 2 && !evidence.realized().count(s)) out.missing.push_back(s);
  for (Coalition s : evidence.realized())
    if (s.size() >= 2 && !promoted.count(s)) out.extra.push_back(s);
  out.compliant = out.missing.empty() && out.extra.empty();
  return out;
}

Rational collectible_tax(const CISNGame& cisn, const EvidenceSet& evidence) {
  if (evidence.universe_size() != cisn.universe().size())
    throw UniverseMismatch("evidence and game universes differ");
  Rational tau(0);
  for (Coalition s : evidence.realized()) {
    const Rational iota = cisn.incentive(s);
    if (iota < 0) tau -= iota;
  }
  return tau;
}

RedistributionResult redistribute(const CISNGame& cisn, const Policy& policy, const EvidenceSet& evidence,
                                  const Rational& tau) {
  if (tau < 0) throw ValidationError("collected tax must be non-negative");
  if (!(cisn.universe() == policy.universe()) || evidence.universe_size() != cisn.universe().size())
    throw UniverseMismatch("game, policy and evidence universes differ");

  const std::size_t n = cisn.universe().size();
  RedistributionResult out;
  out.omega = zero_allocation(n);
  out.union_shapley = zero_allocation(n);
  out.tau = tau;
  out.residual = tau;

  const auto promoted = policy.effective_promoted();
  Rational sum_of_groups(0);
  for (Coalition s : evidence.realized()) {
    if (!promoted.count(s)) continue;
    out.implemented_promoted.push_back(s);
    out.promoted_union = out.promoted_union | s;
    sum_of_groups += cisn.base().value(s);
  }
  if (out.implemented_promoted.empty()) return out;

  const Game& base = cisn.base();
  out.union_value = base.value(out.promoted_union);
  out.cross_group_synergy = out.implemented_promoted.size() > 1 && out.union_value != sum_of_groups;

  const Allocation phi = shapley(base.restrict_to(out.promoted_union));
  const auto members = out.promoted_union.members();
  for (std::size_t k = 0; k < members.size(); ++k)
    out.union_shapley(static_cast<Eigen::Index>(members[k])) = phi(static_cast<Eigen::Index>(k));
  if (out.union_value == 0) return out;

  for (AgentId i : members) {
    const auto idx = static_cast<Eigen::Index>(i);
    out.omega(idx) = tau * out.union_shapley(idx) / out.union_value;
  }
  out.residual = tau - out.omega.sum();
  return out;
}

}  // namespace symbiont
