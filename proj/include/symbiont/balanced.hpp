#pragma once

#include "symbiont/game.hpp"

#include <map>
#include <optional>
#include <vector>

namespace symbiont {

/// Weights on non-empty coalitions such that every agent's coalitions sum to 1.
struct BalancedVector {
  std::map<Coalition, Rational, CanonicalLess> weights;
};

/// Largest universe for which vertex enumeration is offered.
inline constexpr std::size_t kVertexEnumerationCap = 5;

/// Vertices of the polytope { lambda >= 0 : sum_{S ni i} lambda_S = 1 for all i }
/// over the non-empty coalitions of n agents, found by solving every square or
/// over-determined basis exactly. Equivalent to the minimal balanced
/// collections with their unique weights.
std::vector<BalancedVector> balanced_vertices(std::size_t n);

bool is_balanced_vector(std::size_t n, const BalancedVector& lambda);

/// sum_S lambda_S v(S) - v(N).
Rational balanced_excess(const Game& game, const BalancedVector& lambda);

/// The vertex with the largest positive excess, or nullopt when the game is
/// balanced. Only for n <= kVertexEnumerationCap.
std::optional<BalancedVector> violating_balanced_vector(const Game& game);

}  // namespace symbiont
