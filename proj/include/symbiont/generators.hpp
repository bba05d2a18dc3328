#pragma once

#include "symbiont/isn.hpp"
#include "symbiont/policy.hpp"
#include "symbiont/redistribution.hpp"

#include <random>

namespace symbiont::gen {

using Rng = std::mt19937_64;

/// p/q with |p| <= max_abs, 1 <= q <= max_den.
Rational rational(Rng& rng, int max_abs = 12, int max_den = 4);
/// Strictly positive p/q with 1 <= p <= max_num.
Rational positive_rational(Rng& rng, int max_num = 12, int max_den = 4);

/// Normalised superadditive explicit game: v(S) = 0 for |S| <= 1, otherwise the
/// best split value plus a random increment (strictly positive when `strict`).
Game superadditive_game(const Universe& universe, Rng& rng, bool strict = true);

/// Random cost table whose induced game is superadditive.
CostTable superadditive_costs(const Universe& universe, Rng& rng);

/// Basic MC-net with `rules` rules, non-empty positive patterns, disjoint
/// negative patterns and non-zero values.
MCNet mcnet(const Universe& universe, std::size_t rules, Rng& rng);

/// Arbitrary explicit game with v({}) = 0 and values in [-max_abs, max_abs].
Game arbitrary_game(const Universe& universe, Rng& rng, int max_abs = 10);

/// Disjoint promoted groups of size >= 2 (at least one when n >= 2), a random
/// sample of other coalitions marked prohibited and a random default.
Policy exclusive_policy(const Universe& universe, Rng& rng);

/// Realises a random non-empty subset of the listed promoted groups (all of
/// them disjoint) and random extra coalitions among the remaining agents.
EvidenceSet realized_evidence(const Policy& policy, Rng& rng);

}  // namespace symbiont::gen
