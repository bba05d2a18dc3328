#include "symbiont/solution.hpp"

#include "symbiont/balanced.hpp"
#include "symbiont/errors.hpp"
#include "symbiont/isn.hpp"

namespace symbiont {

namespace {

using Eigen::Index;

void require_shapley_ready(const MCNet& net) {
  for (const auto& v : validate(net))
    if (v.kind != RuleViolation::Kind::ZeroValue) throw ValidationError("malformed MC-net: " + v.message);
}

Rational coalition_sum(const Allocation& x, Coalition s) {
  Rational total(0);
  for (AgentId i : s.members()) total += x(static_cast<Index>(i));
  return total;
}

}  // namespace

Allocation shapley_permutation(const Game& game) {
  const std::size_t n = game.size();
  if (n > kPermutationOracleCap)
    throw CapExceeded("shapley_permutation: " + std::to_string(n) + " agents exceeds the oracle cap of " +
                      std::to_string(kPermutationOracleCap));
  const auto v = game.table();
  std::vector<Rational> weight(n);
  const Rational n_fact = factorial(static_cast<unsigned>(n));
  for (std::size_t s = 0; s < n; ++s)
    weight[s] = factorial(static_cast<unsigned>(s)) * factorial(static_cast<unsigned>(n - s - 1)) / n_fact;

  Allocation phi = zero_allocation(n);
  for (AgentId i = 0; i < n; ++i) {
    const Coalition::Bits me = Coalition::Bits{1} << i;
    for (Coalition::Bits bits = 0; bits < v.size(); ++bits) {
      if (bits & me) continue;
      const Rational& marginal = v[bits | me] - v[bits];
      if (marginal != 0) phi(static_cast<Index>(i)) += weight[Coalition::from_bits(bits).size()] * marginal;
    }
  }
  return phi;
}

Allocation shapley_mcnet(const MCNet& net) {
  require_shapley_ready(net);
  Allocation phi = zero_allocation(net.universe().size());
  for (const auto& rule : net.rules()) {
    if (rule.value == 0) continue;
    const unsigned p = static_cast<unsigned>(rule.positive.size());
    const unsigned m = static_cast<unsigned>(rule.negative.size());
    const Rational total = factorial(p + m);
    const Rational gain = rule.value * factorial(p - 1) * factorial(m) / total;
    for (AgentId i : rule.positive.members()) phi(static_cast<Index>(i)) += gain;
    if (m == 0) continue;
    const Rational loss = rule.value * factorial(p) * factorial(m - 1) / total;
    for (AgentId j : rule.negative.members()) phi(static_cast<Index>(j)) -= loss;
  }
  return phi;
}

Allocation shapley(const Game& game) {
  if (const auto* net = game.mcnet()) return shapley_mcnet(*net);
  if (game.size() <= kPermutationOracleCap) return shapley_permutation(game);
  return shapley_mcnet(to_mcnet(game));
}

std::optional<CoreViolation> core_membership(const Game& game, const Allocation& x) {
  const std::size_t n = game.size();
  if (static_cast<std::size_t>(x.size()) != n)
    throw ValidationError("allocation has " + std::to_string(x.size()) + " entries for " + std::to_string(n) +
                          " agents");
  require_enumerable(n, "core_membership");
  const auto v = game.table();
  const Coalition grand = game.grand();
  const Rational total = x.sum();
  if (total != v[grand.bits()])
    return CoreViolation{CoreViolation::Kind::Efficiency, grand, v[grand.bits()] - total};

  std::optional<CoreViolation> worst;
  for (Coalition s : canonical_coalitions(n)) {
    if (s.empty() || s == grand) continue;
    Rational deficit = v[s.bits()] - coalition_sum(x, s);
    if (deficit > 0 && (!worst || deficit > worst->deficit))
      worst = CoreViolation{CoreViolation::Kind::Rationality, s, std::move(deficit)};
  }
  return worst;
}

ratsolve::LinearSystem<Rational> core_system(const Game& game) {
  const std::size_t n = game.size();
  require_enumerable(n, "core_system");
  const auto v = game.table();
  const Coalition grand = game.grand();
  ratsolve::LinearSystem<Rational> system(static_cast<Index>(n));
  auto indicator = [n](Coalition s) {
    Vector<Rational> row = Vector<Rational>::Zero(static_cast<Index>(n));
    for (AgentId i : s.members()) row(static_cast<Index>(i)) = 1;
    return row;
  };
  system.add_equality(indicator(grand), v[grand.bits()]);
  for (Coalition s : canonical_coalitions(n)) {
    if (s.empty() || s == grand) continue;
    system.add_inequality(indicator(s), v[s.bits()]);
  }
  return system;
}

CoreVerdict core_feasible(const Game& game) {
  const auto system = core_system(game);
  auto result = ratsolve::feasible(system);

  CoreVerdict verdict;
  if (result.feasible()) {
    verdict.nonempty = true;
    verdict.witness = std::move(*result.witness);
    return verdict;
  }
  const auto& cert = *result.certificate;
  const Coalition grand = game.grand();
  Index row = 0;
  for (Coalition s : canonical_coalitions(game.size())) {
    if (s.empty() || s == grand) continue;
    const Rational& lambda = cert.ge_multipliers(row++);
    if (lambda != 0) verdict.certificate.push_back({s, false, lambda});
  }
  if (cert.eq_multipliers(0) != 0) verdict.certificate.push_back({grand, true, cert.eq_multipliers(0)});
  verdict.gap = cert.gap;
  return verdict;
}

bool is_balanced(const Game& game) {
  const bool primal = core_feasible(game).nonempty;
  if (game.size() >= 1 && game.size() <= 4) {
    const bool dual = !violating_balanced_vector(game).has_value();
    if (dual != primal)
      throw std::logic_error("balancedness: primal feasibility and balanced-vector enumeration disagree");
  }
  return primal;
}

std::optional<SupermodularityWitness> is_supermodular(const Game& game) {
  require_enumerable(game.size(), "is_supermodular");
  const auto v = game.table();
  const auto order = canonical_coalitions(game.size());
  for (Coalition s : order)
    for (Coalition t : order)
      if (v[s.bits()] + v[t.bits()] > v[(s | t).bits()] + v[(s & t).bits()])
        return SupermodularityWitness{s, t};
  return std::nullopt;
}

Implementability check_implementable(const Game& game) {
  Implementability out;
  out.stable = core_feasible(game).nonempty;
  out.fair_and_stable = out.stable && !core_membership(game, shapley(game)).has_value();
  return out;
}

}  // namespace symbiont
