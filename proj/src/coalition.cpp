#include "symbiont/coalition.hpp"

#include "symbiont/errors.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <set>

namespace symbiont {

namespace {

Coalition::Bits bit(AgentId id) {
  if (id >= kMaxAgents) throw InvalidCoalition("agent id " + std::to_string(id) + " exceeds 64-agent limit");
  return Coalition::Bits{1} << id;
}

std::atomic<std::size_t> g_cap{kDefaultEnumerationCap};

}  // namespace

Coalition Coalition::of(std::initializer_list<AgentId> members) {
  Bits b = 0;
  for (AgentId id : members) b |= bit(id);
  return Coalition(b);
}

Coalition Coalition::of(const std::vector<AgentId>& members) {
  Bits b = 0;
  for (AgentId id : members) b |= bit(id);
  return Coalition(b);
}

Coalition Coalition::singleton(AgentId id) { return Coalition(bit(id)); }

Coalition Coalition::first(std::size_t n) {
  if (n > kMaxAgents) throw InvalidCoalition("universe larger than 64 agents");
  return Coalition(n == kMaxAgents ? ~Bits{0} : (Bits{1} << n) - 1);
}

std::size_t Coalition::size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

Coalition Coalition::with(AgentId id) const { return Coalition(bits_ | bit(id)); }
Coalition Coalition::without(AgentId id) const { return Coalition(bits_ & ~bit(id)); }

std::vector<AgentId> Coalition::members() const {
  std::vector<AgentId> out;
  out.reserve(size());
  for (Bits b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<AgentId>(std::countr_zero(b)));
  return out;
}

std::size_t Coalition::span() const {
  return bits_ == 0 ? 0 : kMaxAgents - static_cast<std::size_t>(std::countl_zero(bits_));
}

bool canonical_less(Coalition a, Coalition b) {
  const Coalition::Bits diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const Coalition::Bits lowest = diff & (~diff + 1);
  return (a.bits() & lowest) != 0;
}

std::vector<Coalition> canonical_coalitions(std::size_t n) {
  return canonical_subsets(Coalition::first(n));
}

std::vector<Coalition> coalitions_by_size(std::size_t n) {
  auto out = canonical_coalitions(n);
  std::stable_sort(out.begin(), out.end(),
                   [](Coalition a, Coalition b) { return a.size() < b.size(); });
  return out;
}

std::vector<Coalition> canonical_subsets(Coalition base) {
  const std::vector<AgentId> ids = base.members();
  const std::size_t k = ids.size();
  if (k >= 63) throw CapExceeded("cannot enumerate subsets of more than 62 agents");
  const std::uint64_t count = std::uint64_t{1} << k;
  std::vector<Coalition> out;
  out.reserve(count);
  // Reading the counter with ids[0] as the most significant bit and walking it
  // downwards produces exactly the canonical order.
  for (std::uint64_t r = count; r-- > 0;) {
    Coalition::Bits bits = 0;
    for (std::size_t pos = 0; pos < k; ++pos)
      if ((r >> (k - 1 - pos)) & 1U) bits |= Coalition::Bits{1} << ids[pos];
    out.push_back(Coalition::from_bits(bits));
  }
  return out;
}

Universe::Universe(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxAgents) throw ValidationError("universe larger than 64 agents");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw ValidationError("agent names must be non-empty");
    if (!seen.insert(n).second) throw ValidationError("duplicate agent name \"" + n + "\"");
  }
}

Universe Universe::anonymous(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back("a" + std::to_string(i));
  return Universe(std::move(names));
}

std::optional<AgentId> Universe::find(const std::string& name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<AgentId>(it - names_.begin());
}

AgentId Universe::id(const std::string& name) const {
  if (auto id = find(name)) return *id;
  throw InvalidCoalition("unknown agent \"" + name + "\"");
}

void Universe::require(Coalition s) const {
  if (!contains(s))
    throw InvalidCoalition("coalition references agent " + std::to_string(s.span() - 1) +
                           " outside a universe of " + std::to_string(size()) + " agents");
}

Coalition Universe::coalition(const std::vector<std::string>& names) const {
  Coalition s;
  for (const auto& n : names) s = s.with(id(n));
  return s;
}

std::vector<std::string> Universe::names_of(Coalition s) const {
  require(s);
  std::vector<std::string> out;
  for (AgentId id : s.members()) out.push_back(names_[id]);
  return out;
}

std::string Universe::label(Coalition s) const {
  const auto names = names_of(s);
  const bool short_names =
      std::all_of(names_.begin(), names_.end(), [](const std::string& n) { return n.size() == 1; });
  std::string out;
  if (short_names && !names.empty()) {
    for (const auto& n : names) out += n;
    return out;
  }
  out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
  return out + "}";
}

Universe Universe::restricted(Coalition s) const {
  return Universe(names_of(s));
}

Coalition expand(Coalition sub, Coalition members) {
  const auto ids = members.members();
  Coalition::Bits out = 0;
  for (Coalition::Bits b = sub.bits(); b != 0; b &= b - 1) {
    const auto pos = static_cast<std::size_t>(std::countr_zero(b));
    if (pos >= ids.size()) throw InvalidCoalition("sub-coalition outside restricted universe");
    out |= Coalition::Bits{1} << ids[pos];
  }
  return Coalition::from_bits(out);
}

Coalition compress(Coalition s, Coalition members) {
  if (!s.subset_of(members)) throw InvalidCoalition("coalition not contained in restriction");
  const auto ids = members.members();
  Coalition::Bits out = 0;
  for (std::size_t pos = 0; pos < ids.size(); ++pos)
    if (s.contains(ids[pos])) out |= Coalition::Bits{1} << pos;
  return Coalition::from_bits(out);
}

std::size_t enumeration_cap() { return g_cap.load(std::memory_order_relaxed); }

void set_enumeration_cap(std::size_t cap) {
  if (cap == 0 || cap > 30) throw std::invalid_argument("enumeration cap must be in 1..30");
  g_cap.store(cap, std::memory_order_relaxed);
}

void require_enumerable(std::size_t n, const char* operation) {
  if (n > enumeration_cap())
    throw CapExceeded(std::string(operation) + ": " + std::to_string(n) +
                      " agents exceeds the enumeration cap of " + std::to_string(enumeration_cap()) +
                      " (set SYMBIONT_MAX_AGENTS to raise it)");
}

}  // namespace symbiont
