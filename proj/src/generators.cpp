#include "symbiont/generators.hpp"

#include <algorithm>

namespace symbiont::gen {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

Rational rational(Rng& rng, int max_abs, int max_den) {
  return Rational(uniform(rng, -max_abs, max_abs), uniform(rng, 1, max_den));
}

Rational positive_rational(Rng& rng, int max_num, int max_den) {
  return Rational(uniform(rng, 1, max_num), uniform(rng, 1, max_den));
}

Game superadditive_game(const Universe& universe, Rng& rng, bool strict) {
  const std::size_t n = universe.size();
  require_enumerable(n, "superadditive_game");
  std::vector<Rational> v(std::size_t{1} << n);
  for (Coalition s : coalitions_by_size(n)) {
    if (s.size() < 2) continue;
    Rational best(0);
    for (Coalition a : canonical_subsets(s)) {
      if (a.empty() || a == s) continue;
      const Rational split = v[a.bits()] + v[(s - a).bits()];
      if (split > best) best = split;
    }
    const Rational bump = strict ? positive_rational(rng, 8) : Rational(uniform(rng, 0, 8), uniform(rng, 1, 4));
    v[s.bits()] = best + bump;
  }
  return Game::from_table(universe, std::move(v));
}

CostTable superadditive_costs(const Universe& universe, Rng& rng) {
  const Game g = superadditive_game(universe, rng, false);
  CostTable out{universe, {}};
  for (Coalition s : coalitions_by_size(universe.size())) {
    if (s.size() < 2) continue;
    const Rational operational = Rational(uniform(rng, 0, 20), uniform(rng, 1, 3));
    out.entries.emplace(s, Costs{operational + g.value(s), operational});
  }
  return out;
}

MCNet mcnet(const Universe& universe, std::size_t rules, Rng& rng) {
  const std::size_t n = universe.size();
  std::vector<Rule> out;
  out.reserve(rules);
  while (out.size() < rules) {
    Coalition positive, negative;
    for (AgentId i = 0; i < n; ++i) {
      const int roll = uniform(rng, 0, 5);
      if (roll <= 1) positive = positive.with(i);
      else if (roll == 2) negative = negative.with(i);
    }
    if (positive.empty()) continue;
    Rational value = rational(rng, 10, 3);
    if (value == 0) continue;
    out.push_back({positive, negative, std::move(value)});
  }
  return MCNet(universe, std::move(out));
}

Game arbitrary_game(const Universe& universe, Rng& rng, int max_abs) {
  std::vector<Rational> v(std::size_t{1} << universe.size());
  for (std::size_t bits = 1; bits < v.size(); ++bits) v[bits] = rational(rng, max_abs, 3);
  return Game::from_table(universe, std::move(v));
}

Policy exclusive_policy(const Universe& universe, Rng& rng) {
  const std::size_t n = universe.size();
  std::vector<AgentId> order(n);
  for (AgentId i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);

  CoalitionSet promoted;
  std::size_t pos = 0;
  while (n - pos >= 2) {
    const auto room = static_cast<int>(n - pos);
    const auto size = static_cast<std::size_t>(uniform(rng, 2, std::min(room, 4)));
    Coalition group;
    for (std::size_t k = 0; k < size; ++k) group = group.with(order[pos + k]);
    pos += size;
    promoted.insert(group);
    if (uniform(rng, 0, 2) == 0) break;  // leave the remaining agents unpromoted
  }

  CoalitionSet prohibited;
  for (Coalition s : canonical_coalitions(n))
    if (s.size() >= 2 && !promoted.count(s) && uniform(rng, 0, 2) == 0) prohibited.insert(s);
  const PolicyLabel fallback = uniform(rng, 0, 1) == 0 ? PolicyLabel::Permitted : PolicyLabel::Prohibited;
  return Policy(universe, std::move(promoted), std::move(prohibited), fallback);
}

EvidenceSet realized_evidence(const Policy& policy, Rng& rng) {
  const Universe& u = policy.universe();
  std::vector<Coalition> realized;
  Coalition used;
  for (Coalition s : policy.promoted()) {
    if (s.intersects(used) || (!realized.empty() && uniform(rng, 0, 1) == 0)) continue;
    realized.push_back(s);
    used = used | s;
  }
  std::vector<AgentId> rest;
  for (AgentId i = 0; i < u.size(); ++i)
    if (!used.contains(i)) rest.push_back(i);
  std::shuffle(rest.begin(), rest.end(), rng);
  std::size_t pos = 0;
  while (pos < rest.size()) {
    const auto size = static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(std::min<std::size_t>(3, rest.size() - pos))));
    Coalition group;
    for (std::size_t k = 0; k < size; ++k) group = group.with(rest[pos + k]);
    pos += size;
    if (uniform(rng, 0, 1) == 0) realized.push_back(group);
  }
  return EvidenceSet(u, std::move(realized));
}

}  // namespace symbiont::gen
