#pragma once

#include "symbiont/coalition.hpp"
#include "symbiont/errors.hpp"

#include <optional>
#include <set>
#include <vector>

namespace symbiont {

enum class PolicyLabel { Promoted, Permitted, Prohibited };

const char* to_string(PolicyLabel label);
/// "promoted" / "permitted" / "prohibited"; throws std::invalid_argument.
PolicyLabel parse_policy_label(const std::string& text);

/// Orders by size, then canonically. Policy and evidence lists use it.
struct SizeThenCanonical {
  bool operator()(Coalition a, Coalition b) const {
    return a.size() != b.size() ? a.size() < b.size() : canonical_less(a, b);
  }
};

using CoalitionSet = std::set<Coalition, SizeThenCanonical>;

/// Game-independent labelling of coalitions. Listed coalitions carry their
/// list's label; unlisted coalitions of size <= 1 are permitted; every other
/// unlisted coalition gets the default.
class Policy {
 public:
  Policy(Universe universe, CoalitionSet promoted, CoalitionSet prohibited,
         PolicyLabel default_label = PolicyLabel::Permitted);

  const Universe& universe() const { return universe_; }
  const CoalitionSet& promoted() const { return promoted_; }
  const CoalitionSet& prohibited() const { return prohibited_; }
  PolicyLabel default_label() const { return default_; }

  PolicyLabel label(Coalition s) const;

  /// Every coalition labelled promoted, including unlisted ones when the
  /// default is promoted (which requires enumeration).
  CoalitionSet effective_promoted() const;
  /// Same for prohibited, restricted to coalitions of size >= 2.
  CoalitionSet effective_prohibited() const;

 private:
  CoalitionSet labelled_by_default(PolicyLabel wanted) const;

  Universe universe_;
  CoalitionSet promoted_;
  CoalitionSet prohibited_;
  PolicyLabel default_;
};

inline PolicyLabel label(const Policy& policy, Coalition s) { return policy.label(s); }

struct CoalitionPair {
  Coalition first;
  Coalition second;
  friend bool operator==(const CoalitionPair&, const CoalitionPair&) = default;
};

/// First pair of distinct promoted coalitions that share an agent.
std::optional<CoalitionPair> check_mutual_exclusivity(const Policy& policy);

/// First pair (smaller, larger) of promoted coalitions with smaller a strict
/// subset of larger.
std::optional<CoalitionPair> check_minimality(const Policy& policy);

class ExclusivityViolation : public ValidationError {
 public:
  ExclusivityViolation(CoalitionPair pair, const std::string& what) : ValidationError(what), pair_(pair) {}
  const CoalitionPair& pair() const noexcept { return pair_; }

 private:
  CoalitionPair pair_;
};

/// Throws ExclusivityViolation naming the first overlapping promoted pair.
void require_exclusive(const Policy& policy);

}  // namespace symbiont
