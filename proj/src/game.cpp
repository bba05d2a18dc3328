#include "symbiont/game.hpp"

#include "symbiont/errors.hpp"

namespace symbiont {

Game Game::from_values(Universe universe, const ValueMap& entries) {
  const std::size_t n = universe.size();
  require_enumerable(n, "explicit game");
  const std::size_t count = std::size_t{1} << n;
  std::vector<Rational> table(count);
  std::vector<bool> seen(count, false);
  for (const auto& [s, v] : entries) {
    if (!universe.contains(s))
      throw ValidationError("value entry for a coalition outside the universe");
    table[s.bits()] = v;
    seen[s.bits()] = true;
  }
  if (table[0] != 0) throw ValidationError("v({}) must be 0");
  for (std::size_t bits = 0; bits < count; ++bits) {
    const auto s = Coalition::from_bits(bits);
    if (!seen[bits] && s.size() >= 2)
      throw ValidationError("missing value for coalition " + universe.label(s));
  }
  return Game(std::move(universe), std::make_shared<const std::vector<Rational>>(std::move(table)));
}

Game Game::from_table(Universe universe, std::vector<Rational> table) {
  require_enumerable(universe.size(), "explicit game");
  if (table.size() != (std::size_t{1} << universe.size()))
    throw ValidationError("table size does not match 2^n");
  if (table[0] != 0) throw ValidationError("v({}) must be 0");
  return Game(std::move(universe), std::make_shared<const std::vector<Rational>>(std::move(table)));
}

Game::Game(MCNet net) : universe_(net.universe()), backing_(std::move(net)) {}

Rational Game::value(Coalition s) const {
  universe_.require(s);
  if (const auto* t = std::get_if<Table>(&backing_)) return (**t)[s.bits()];
  return symbiont::value(std::get<MCNet>(backing_), s);
}

std::vector<Rational> Game::table() const {
  if (const auto* t = std::get_if<Table>(&backing_)) return **t;
  require_enumerable(size(), "game enumeration");
  const auto& net = std::get<MCNet>(backing_);
  const std::size_t count = std::size_t{1} << size();
  std::vector<Rational> out(count);
  for (const auto& r : net.rules()) {
    if (!r.positive.subset_of(grand()) || r.positive.intersects(r.negative)) continue;
    // Enumerate supersets of the positive pattern that avoid the negative one.
    const auto free = grand() - r.positive - r.negative;
    Coalition::Bits sub = free.bits();
    while (true) {
      out[r.positive.bits() | sub] += r.value;
      if (sub == 0) break;
      sub = (sub - 1) & free.bits();
    }
  }
  return out;
}

Game Game::restrict_to(Coalition s) const {
  universe_.require(s);
  if (const auto* net = mcnet()) return Game(restrict_net(*net, s));
  const auto& full = *std::get<Table>(backing_);
  const std::size_t k = s.size();
  std::vector<Rational> sub(std::size_t{1} << k);
  for (std::size_t bits = 0; bits < sub.size(); ++bits)
    sub[bits] = full[expand(Coalition::from_bits(bits), s).bits()];
  return from_table(universe_.restricted(s), std::move(sub));
}

ValueMap Game::values() const {
  const auto t = table();
  ValueMap out;
  for (std::size_t bits = 0; bits < t.size(); ++bits) out.emplace(Coalition::from_bits(bits), t[bits]);
  return out;
}

Game operator+(const Game& a, const Game& b) {
  if (!(a.universe() == b.universe())) throw UniverseMismatch("cannot add games over different universes");
  if (a.mcnet() && b.mcnet()) return Game(concat(*a.mcnet(), *b.mcnet()));
  auto ta = a.table();
  const auto tb = b.table();
  for (std::size_t i = 0; i < ta.size(); ++i) ta[i] += tb[i];
  return Game::from_table(a.universe(), std::move(ta));
}

bool same_values(const Game& a, const Game& b) {
  return a.universe() == b.universe() && a.table() == b.table();
}

}  // namespace symbiont
