#pragma once

#include "symbiont/generators.hpp"
#include "symbiont/policy.hpp"
#include "symbiont/solution.hpp"

#include <initializer_list>
#include <string>

namespace fixtures {

using namespace symbiont;

inline Rational q(const std::string& text) { return parse_rational(text); }

inline Allocation alloc(std::initializer_list<const char*> parts) {
  Allocation x(static_cast<Eigen::Index>(parts.size()));
  Eigen::Index k = 0;
  for (const char* p : parts) x(k++) = q(p);
  return x;
}

inline Universe ijk() { return Universe({"i", "j", "k"}); }

inline Universe agents(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return Universe(std::move(names));
}

/// (ij,k) -> 4, (ik,j) -> 5, (jk,i) -> 4, (ijk,{}) -> 6.
inline MCNet running_net() {
  const Universe u = ijk();
  return MCNet(u, {{u.coalition({"i", "j"}), u.coalition({"k"}), Rational(4)},
                   {u.coalition({"i", "k"}), u.coalition({"j"}), Rational(5)},
                   {u.coalition({"j", "k"}), u.coalition({"i"}), Rational(4)},
                   {u.all(), Coalition{}, Rational(6)}});
}

inline Game running_game() { return Game(running_net()); }

/// Singletons and pairs prohibited, the grand coalition promoted.
inline Policy policy_one() {
  const Universe u = ijk();
  CoalitionSet prohibited;
  for (Coalition s : canonical_coalitions(3))
    if (!s.empty() && s.size() < 3) prohibited.insert(s);
  return Policy(u, {u.all()}, prohibited);
}

}  // namespace fixtures
