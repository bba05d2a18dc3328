#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace symbiont {

using AgentId = std::size_t;

/// Hard limit imposed by the 64-bit membership vector.
inline constexpr std::size_t kMaxAgents = 64;

/// A subset of the agent universe stored as its membership vector: bit i is
/// set iff agent i belongs to the coalition.
class Coalition {
 public:
  using Bits = std::uint64_t;

  constexpr Coalition() = default;
  static constexpr Coalition from_bits(Bits bits) { return Coalition(bits); }
  static Coalition of(std::initializer_list<AgentId> members);
  static Coalition of(const std::vector<AgentId>& members);
  static Coalition singleton(AgentId id);
  /// {0, ..., n-1}.
  static Coalition first(std::size_t n);

  constexpr Bits bits() const { return bits_; }
  std::size_t size() const;
  constexpr bool empty() const { return bits_ == 0; }
  bool contains(AgentId id) const { return id < kMaxAgents && ((bits_ >> id) & 1U) != 0; }
  constexpr bool subset_of(Coalition other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool proper_subset_of(Coalition other) const {
    return subset_of(other) && bits_ != other.bits_;
  }
  constexpr bool intersects(Coalition other) const { return (bits_ & other.bits_) != 0; }

  Coalition with(AgentId id) const;
  Coalition without(AgentId id) const;

  /// Members in ascending id order.
  std::vector<AgentId> members() const;
  /// Highest member id plus one, 0 for the empty coalition.
  std::size_t span() const;

  friend constexpr Coalition operator|(Coalition a, Coalition b) { return Coalition(a.bits_ | b.bits_); }
  friend constexpr Coalition operator&(Coalition a, Coalition b) { return Coalition(a.bits_ & b.bits_); }
  friend constexpr Coalition operator-(Coalition a, Coalition b) { return Coalition(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(Coalition a, Coalition b) = default;
  /// Numeric order on the raw bits; used only for associative containers.
  friend constexpr auto operator<=>(Coalition a, Coalition b) { return a.bits_ <=> b.bits_; }

 private:
  constexpr explicit Coalition(Bits bits) : bits_(bits) {}
  Bits bits_ = 0;
};

/// Deterministic reporting order. Membership vectors are compared position by
/// position starting at agent 0; at the first difference the coalition that
/// contains the agent comes first. For agents i, j, k this yields
/// ijk, ij, ik, i, jk, j, k, {}.
bool canonical_less(Coalition a, Coalition b);

struct CanonicalLess {
  bool operator()(Coalition a, Coalition b) const { return canonical_less(a, b); }
};

/// All 2^n coalitions of {0..n-1} in canonical order (grand coalition first,
/// empty coalition last).
std::vector<Coalition> canonical_coalitions(std::size_t n);

/// All 2^n coalitions ordered by size, then canonically within a size
/// ({}, i, j, k, ij, ik, jk, ijk). Used for emitted rule lists.
std::vector<Coalition> coalitions_by_size(std::size_t n);

/// All subsets of `base` in canonical order.
std::vector<Coalition> canonical_subsets(Coalition base);

/// Ordered list of distinct agent names; ids are positions in the list.
class Universe {
 public:
  Universe() = default;
  explicit Universe(std::vector<std::string> names);
  /// Agents named "a0".."a{n-1}".
  static Universe anonymous(std::size_t n);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(AgentId id) const { return names_.at(id); }
  std::optional<AgentId> find(const std::string& name) const;
  /// Throws InvalidCoalition when the name is unknown.
  AgentId id(const std::string& name) const;

  Coalition all() const { return Coalition::first(size()); }
  bool contains(Coalition s) const { return s.subset_of(all()); }
  /// Throws InvalidCoalition when `s` reaches outside the universe.
  void require(Coalition s) const;

  Coalition coalition(const std::vector<std::string>& names) const;
  std::vector<std::string> names_of(Coalition s) const;
  /// Compact label: concatenated names when all are one character ("ijk"),
  /// otherwise "{a,b,c}".
  std::string label(Coalition s) const;

  /// Sub-universe made of the members of `s`, in ascending id order.
  Universe restricted(Coalition s) const;

  friend bool operator==(const Universe&, const Universe&) = default;

 private:
  std::vector<std::string> names_;
};

/// Maps a coalition of the sub-universe made of `members` (ids 0..k-1 in
/// ascending order of the original ids) back to the parent universe.
Coalition expand(Coalition sub, Coalition members);
/// Inverse of expand for coalitions contained in `members`.
Coalition compress(Coalition s, Coalition members);

/// Current limit for operations that enumerate all 2^n coalitions.
std::size_t enumeration_cap();
void set_enumeration_cap(std::size_t cap);
inline constexpr std::size_t kDefaultEnumerationCap = 20;
/// Throws CapExceeded when n exceeds enumeration_cap().
void require_enumerable(std::size_t n, const char* operation);

}  // namespace symbiont
