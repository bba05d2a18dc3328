#pragma once

#include "symbiont/game.hpp"
#include "symbiont/ratsolve.hpp"

#include <optional>
#include <vector>

namespace symbiont {

/// Largest universe shapley_permutation accepts.
inline constexpr std::size_t kPermutationOracleCap = 10;

/// Average marginal contribution over all orderings, computed through the
/// subset form  sum_S s!(n-s-1)!/n! (v(S u {i}) - v(S)).
Allocation shapley_permutation(const Game& game);

/// Rule-wise closed form on an MC-net: for a rule (P, N) -> v with p = |P|,
/// m = |N|, each member of P gets v (p-1)! m! / (p+m)! and each member of N
/// gets -v p! (m-1)! / (p+m)!. Linear in the size of the net. Zero-valued
/// rules are accepted and contribute nothing.
Allocation shapley_mcnet(const MCNet& net);

/// MC-net games use the rule-wise form, explicit games the subset form (or
/// the rule-wise form on their converted net above kPermutationOracleCap).
Allocation shapley(const Game& game);

struct CoreViolation {
  enum class Kind { Efficiency, Rationality };
  Kind kind;
  Coalition coalition;
  /// v(S) - x(S). Positive for a rationality violation; either sign for an
  /// efficiency violation.
  Rational deficit;
};

/// nullopt when x is efficient and coalitionally rational. Efficiency is
/// reported first; among rationality violations the one with the largest
/// deficit wins, ties going to the canonically first coalition.
std::optional<CoreViolation> core_membership(const Game& game, const Allocation& x);

/// One row of an infeasibility certificate: multiplier times either the
/// efficiency equation (coalition = N) or the rationality inequality of the
/// coalition.
struct CertificateTerm {
  Coalition coalition;
  bool efficiency = false;
  Rational multiplier;
};

struct CoreVerdict {
  bool nonempty = false;
  /// A core allocation when nonempty.
  std::optional<Allocation> witness;
  /// Non-zero certificate rows when empty, in canonical order with the
  /// efficiency row last. Summing them gives 0 >= gap.
  std::vector<CertificateTerm> certificate;
  Rational gap;
};

/// Efficiency equation plus one rationality row per non-empty proper coalition,
/// in canonical order.
ratsolve::LinearSystem<Rational> core_system(const Game& game);

/// Decides core non-emptiness by exact linear feasibility.
CoreVerdict core_feasible(const Game& game);

/// True iff the core is non-empty. For n <= 4 the answer is cross-checked
/// against the balanced-vector vertex enumeration; a disagreement throws
/// std::logic_error.
bool is_balanced(const Game& game);

/// Pair (S, T) with v(S) + v(T) > v(S u T) + v(S n T).
struct SupermodularityWitness {
  Coalition first;
  Coalition second;
};

/// First violating pair, both sides scanned in canonical order.
std::optional<SupermodularityWitness> is_supermodular(const Game& game);

struct Implementability {
  /// Core is non-empty.
  bool stable = false;
  /// The Shapley allocation lies in the core.
  bool fair_and_stable = false;
};

Implementability check_implementable(const Game& game);

}  // namespace symbiont
