#include "symbiont/isn.hpp"

namespace symbiont {

Game build_isn_game(const CostTable& costs) {
  const Universe& u = costs.universe;
  if (u.size() < 2) throw ValidationError("an ISN needs at least two agents");
  require_enumerable(u.size(), "build_isn_game");

  ValueMap values;
  for (const auto& [s, c] : costs.entries) {
    if (!u.contains(s)) throw ValidationError("cost entry for a coalition outside the universe");
    if (c.traditional < 0 || c.operational < 0)
      throw ValidationError("negative cost for coalition " + u.label(s));
  }
  for (Coalition s : canonical_coalitions(u.size())) {
    if (s.size() <= 1) continue;
    const auto it = costs.entries.find(s);
    if (it == costs.entries.end()) throw ValidationError("missing costs for coalition " + u.label(s));
    values.emplace(s, it->second.traditional - it->second.operational);
  }

  Game game = Game::from_values(u, values);
  if (auto w = check_superadditive(game)) {
    throw SuperadditivityViolation(
        *w, "cost data is not superadditive: v(" + u.label(w->first | w->second) + ") < v(" +
                u.label(w->first) + ") + v(" + u.label(w->second) + ")");
  }
  return game;
}

std::optional<SuperadditivityWitness> check_superadditive(const Game& game) {
  require_enumerable(game.size(), "check_superadditive");
  const auto v = game.table();
  const auto order = canonical_coalitions(game.size());
  for (Coalition s : order) {
    if (s.empty()) continue;
    for (Coalition t : order) {
      if (t.empty() || s.intersects(t)) continue;
      if (v[(s | t).bits()] < v[s.bits()] + v[t.bits()]) return SuperadditivityWitness{s, t};
    }
  }
  return std::nullopt;
}

IsnClass classify(const Game& game) {
  if (game.size() < 2) throw ValidationError("an ISN needs at least two agents");
  return game.size() == 2 ? IsnClass::Lambda : IsnClass::Delta;
}

const char* to_string(IsnClass c) { return c == IsnClass::Lambda ? "Lambda" : "Delta"; }

MCNet to_mcnet(const Game& game) {
  require_enumerable(game.size(), "to_mcnet");
  const auto v = game.table();
  const Coalition grand = game.grand();
  std::vector<Rule> rules;
  for (Coalition s : coalitions_by_size(game.size())) {
    if (s.empty() || v[s.bits()] == 0) continue;
    rules.push_back({s, grand - s, v[s.bits()]});
  }
  return MCNet(game.universe(), std::move(rules));
}

}  // namespace symbiont
