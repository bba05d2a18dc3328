#include "symbiont/policy.hpp"

#include <stdexcept>

namespace symbiont {

const char* to_string(PolicyLabel label) {
  switch (label) {
    case PolicyLabel::Promoted: return "promoted";
    case PolicyLabel::Permitted: return "permitted";
    case PolicyLabel::Prohibited: return "prohibited";
  }
  return "?";
}

PolicyLabel parse_policy_label(const std::string& text) {
  if (text == "promoted") return PolicyLabel::Promoted;
  if (text == "permitted") return PolicyLabel::Permitted;
  if (text == "prohibited") return PolicyLabel::Prohibited;
  throw std::invalid_argument("unknown policy label \"" + text + "\"");
}

Policy::Policy(Universe universe, CoalitionSet promoted, CoalitionSet prohibited, PolicyLabel default_label)
    : universe_(std::move(universe)),
      promoted_(std::move(promoted)),
      prohibited_(std::move(prohibited)),
      default_(default_label) {
  for (const CoalitionSet* list : {&promoted_, &prohibited_}) {
    for (Coalition s : *list) {
      if (s.empty()) throw ValidationError("policies cannot label the empty coalition");
      if (!universe_.contains(s)) throw ValidationError("policy names a coalition outside the universe");
    }
  }
  for (Coalition s : promoted_)
    if (prohibited_.count(s)) throw ValidationError("coalition " + universe_.label(s) + " is both promoted and prohibited");
}

PolicyLabel Policy::label(Coalition s) const {
  universe_.require(s);
  if (promoted_.count(s)) return PolicyLabel::Promoted;
  if (prohibited_.count(s)) return PolicyLabel::Prohibited;
  if (s.size() <= 1) return PolicyLabel::Permitted;
  return default_;
}

CoalitionSet Policy::labelled_by_default(PolicyLabel wanted) const {
  CoalitionSet out;
  if (default_ != wanted) return out;
  require_enumerable(universe_.size(), "policy default expansion");
  for (Coalition s : canonical_coalitions(universe_.size()))
    if (s.size() >= 2 && !promoted_.count(s) && !prohibited_.count(s)) out.insert(s);
  return out;
}

CoalitionSet Policy::effective_promoted() const {
  CoalitionSet out = labelled_by_default(PolicyLabel::Promoted);
  out.insert(promoted_.begin(), promoted_.end());
  return out;
}

CoalitionSet Policy::effective_prohibited() const {
  CoalitionSet out = labelled_by_default(PolicyLabel::Prohibited);
  for (Coalition s : prohibited_)
    if (s.size() >= 2) out.insert(s);
  return out;
}

std::optional<CoalitionPair> check_mutual_exclusivity(const Policy& policy) {
  const auto promoted = policy.effective_promoted();
  for (auto a = promoted.begin(); a != promoted.end(); ++a)
    for (auto b = std::next(a); b != promoted.end(); ++b)
      if (a->intersects(*b)) return CoalitionPair{*a, *b};
  return std::nullopt;
}

std::optional<CoalitionPair> check_minimality(const Policy& policy) {
  const auto promoted = policy.effective_promoted();
  for (Coalition small : promoted)
    for (Coalition large : promoted)
      if (small.proper_subset_of(large)) return CoalitionPair{small, large};
  return std::nullopt;
}

void require_exclusive(const Policy& policy) {
  if (auto pair = check_mutual_exclusivity(policy)) {
    const auto& u = policy.universe();
    throw ExclusivityViolation(*pair, "promoted coalitions " + u.label(pair->first) + " and " +
                                          u.label(pair->second) + " overlap");
  }
}

}  // namespace symbiont
