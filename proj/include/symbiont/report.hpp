#pragma once

#include "symbiont/io.hpp"
#include "symbiont/mcnet.hpp"

#include <string>

namespace symbiont::report {

enum class Format { Text, Json };

/// Machine tree of a command's results. Rationals enter the tree through
/// number(), so the text rendering and the JSON rendering read the same nodes.
class Report {
 public:
  explicit Report(bool approx = false) : approx_(approx), tree_(io::Json::object()) {}

  /// "p/q" string, or {"exact": "p/q", "approx": "d.dddddd"} with approximations on.
  io::Json number(const Rational& r) const;
  /// Agent name -> number.
  io::Json allocation(const Universe& universe, const Allocation& x) const;

  io::Json& operator[](const std::string& key) { return tree_[key]; }
  const io::Json& tree() const { return tree_; }

  std::string render(Format format) const;

 private:
  bool approx_;
  io::Json tree_;
};

/// Fixed six-decimal rendering, rounded half away from zero.
std::string decimal(const Rational& r, int places = 6);

/// "(ij,k) -> -4"; empty patterns render as "{}".
std::string rule_string(const Universe& universe, const Rule& rule);

/// "x_i + x_j >= 4" for a rationality row, "x_i + x_j + x_k = 6" for efficiency.
std::string constraint_string(const Universe& universe, Coalition s, bool efficiency, const Rational& rhs);

/// Indented "key: value" lines; arrays of scalars on one line.
std::string render_text(const io::Json& tree);

}  // namespace symbiont::report
