#pragma once

#include "symbiont/errors.hpp"
#include "symbiont/game.hpp"

#include <map>
#include <optional>
#include <utility>

namespace symbiont {

/// Traditional cost T(S) (no symbiosis) and operational cost O(S) (symbiosis
/// realised) of an agent group.
struct Costs {
  Rational traditional;
  Rational operational;
  friend bool operator==(const Costs&, const Costs&) = default;
};

/// Cost data for every coalition of two or more agents.
struct CostTable {
  Universe universe;
  std::map<Coalition, Costs> entries;
  friend bool operator==(const CostTable&, const CostTable&) = default;
};

/// Disjoint pair (S, T) with v(S u T) < v(S) + v(T).
struct SuperadditivityWitness {
  Coalition first;
  Coalition second;
};

class SuperadditivityViolation : public ValidationError {
 public:
  SuperadditivityViolation(SuperadditivityWitness w, const std::string& what)
      : ValidationError(what), witness_(w) {}
  const SuperadditivityWitness& witness() const noexcept { return witness_; }

 private:
  SuperadditivityWitness witness_;
};

/// v(S) = 0 for |S| <= 1 and T(S) - O(S) otherwise. Rejects missing entries,
/// negative costs and non-superadditive data (with the witness pair).
Game build_isn_game(const CostTable& costs);

/// First disjoint pair violating superadditivity, both sides scanned in
/// canonical coalition order; nullopt when the game is superadditive.
std::optional<SuperadditivityWitness> check_superadditive(const Game& game);

/// Lambda: exactly two agents. Delta: three or more.
enum class IsnClass { Lambda, Delta };

IsnClass classify(const Game& game);

const char* to_string(IsnClass c);

/// One rule (S, N \ S) -> v(S) per coalition with v(S) != 0, ordered by
/// coalitions_by_size(). Evaluates identically to the input on every coalition.
MCNet to_mcnet(const Game& game);

}  // namespace symbiont
