#pragma once

#include "symbiont/coalition.hpp"
#include "symbiont/mcnet.hpp"
#include "symbiont/rational.hpp"

#include <map>
#include <memory>
#include <variant>
#include <vector>

namespace symbiont {

/// Sparse characteristic-function input keyed by coalition.
using ValueMap = std::map<Coalition, Rational>;

/// A transferable-utility game (N, v), backed either by an explicit table over
/// all 2^n coalitions or by an MC-net. Immutable once built.
class Game {
 public:
  /// Explicit backing. Missing coalitions of size <= 1 default to 0; any other
  /// missing coalition, a non-zero v({}) or a coalition outside the universe
  /// is a ValidationError. Requires n <= enumeration_cap().
  static Game from_values(Universe universe, const ValueMap& entries);
  /// Explicit backing from a dense table indexed by membership bits.
  static Game from_table(Universe universe, std::vector<Rational> table);
  /// MC-net backing; no enumeration cap.
  explicit Game(MCNet net);

  const Universe& universe() const { return universe_; }
  std::size_t size() const { return universe_.size(); }
  Coalition grand() const { return universe_.all(); }

  bool is_explicit() const { return std::holds_alternative<Table>(backing_); }
  /// Null for explicit games.
  const MCNet* mcnet() const { return std::get_if<MCNet>(&backing_); }

  /// Throws InvalidCoalition when `s` is not a subset of the universe.
  Rational value(Coalition s) const;
  Rational operator()(Coalition s) const { return value(s); }

  /// v over every coalition, indexed by membership bits. Subject to the cap.
  std::vector<Rational> table() const;

  /// Sub-game on the members of `s`; ids are re-indexed onto the restricted
  /// universe. Keeps the backing kind.
  Game restrict_to(Coalition s) const;

  /// Entries of the explicit table (coalitions in canonical order); for
  /// MC-net games, the materialised table.
  ValueMap values() const;

 private:
  using Table = std::shared_ptr<const std::vector<Rational>>;
  Game(Universe universe, Table table) : universe_(std::move(universe)), backing_(std::move(table)) {}

  Universe universe_;
  std::variant<Table, MCNet> backing_;
};

inline Rational value(const Game& game, Coalition s) { return game.value(s); }

/// Pointwise sum over the same universe. MC-net + MC-net stays an MC-net
/// (rule concatenation); otherwise the result is explicit.
Game operator+(const Game& a, const Game& b);

/// Pointwise equality on every coalition (subject to the cap).
bool same_values(const Game& a, const Game& b);

}  // namespace symbiont
