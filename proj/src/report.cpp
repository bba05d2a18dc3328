#include "symbiont/report.hpp"

#include <sstream>

namespace symbiont::report {

namespace {

bool is_number_node(const io::Json& node) {
  return node.is_object() && node.size() == 2 && node.contains("exact") && node.contains("approx");
}

bool is_inline(const io::Json& node) {
  if (node.is_primitive() || is_number_node(node)) return true;
  if (!node.is_array()) return false;
  for (const auto& item : node)
    if (!item.is_primitive() && !is_number_node(item)) return false;
  return true;
}

std::string scalar(const io::Json& node) {
  if (is_number_node(node))
    return node["exact"].get<std::string>() + " (~" + node["approx"].get<std::string>() + ")";
  if (node.is_string()) return node.get<std::string>();
  return node.dump();
}

std::string inline_value(const io::Json& node) {
  if (!node.is_array()) return scalar(node);
  std::string out = "[";
  for (std::size_t i = 0; i < node.size(); ++i) out += (i ? ", " : "") + scalar(node[i]);
  return out + "]";
}

void render_node(std::ostringstream& out, const io::Json& node, int indent);

void render_entry(std::ostringstream& out, const std::string& prefix, const io::Json& value, int indent) {
  if (is_inline(value)) {
    out << prefix << " " << inline_value(value) << "\n";
    return;
  }
  out << prefix << "\n";
  render_node(out, value, indent + 2);
}

void render_node(std::ostringstream& out, const io::Json& node, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) render_entry(out, pad + key + ":", value, indent);
  } else if (node.is_array()) {
    for (const auto& item : node) {
      if (!item.is_object() || item.empty() || is_number_node(item)) {
        render_entry(out, pad + "-", item, indent);
        continue;
      }
      // Object items start on the dash line: "- key: value".
      std::ostringstream nested;
      render_node(nested, item, indent + 2);
      std::string text = nested.str();
      text.replace(static_cast<std::size_t>(indent), 2, "- ");
      out << text;
    }
  } else {
    out << pad << scalar(node) << "\n";
  }
}

}  // namespace

io::Json Report::number(const Rational& r) const {
  if (!approx_) return to_string(r);
  return io::Json{{"exact", to_string(r)}, {"approx", decimal(r)}};
}

io::Json Report::allocation(const Universe& universe, const Allocation& x) const {
  io::Json out = io::Json::object();
  for (AgentId i = 0; i < universe.size(); ++i) out[universe.names()[i]] = number(x(static_cast<Eigen::Index>(i)));
  return out;
}

std::string Report::render(Format format) const {
  if (format == Format::Json) return io::dump(tree_);
  return render_text(tree_);
}

std::string decimal(const Rational& r, int places) {
  using Int = boost::multiprecision::mpz_int;
  Int scale = 1;
  for (int k = 0; k < places; ++k) scale *= 10;
  const Int num = boost::multiprecision::numerator(r);
  const Int den = boost::multiprecision::denominator(r);
  const bool negative = num < 0;
  const Int magnitude = negative ? Int(-num) : num;
  const Int scaled = (magnitude * scale * 2 + den) / (den * 2);
  const Int whole = scaled / scale;
  std::string out = (negative && scaled != 0 ? "-" : "") + whole.str();
  if (places <= 0) return out;
  std::string frac = Int(scaled % scale).str();
  frac.insert(0, static_cast<std::size_t>(places) - frac.size(), '0');
  return out + "." + frac;
}

std::string rule_string(const Universe& universe, const Rule& rule) {
  auto pattern = [&](Coalition s) { return s.empty() ? std::string("{}") : universe.label(s); };
  return "(" + pattern(rule.positive) + "," + pattern(rule.negative) + ") -> " + to_string(rule.value);
}

std::string constraint_string(const Universe& universe, Coalition s, bool efficiency, const Rational& rhs) {
  std::string out;
  for (const auto& name : universe.names_of(s)) out += (out.empty() ? "x_" : " + x_") + name;
  return out + (efficiency ? " = " : " >= ") + to_string(rhs);
}

std::string render_text(const io::Json& tree) {
  std::ostringstream out;
  render_node(out, tree, 0);
  return out.str();
}

}  // namespace symbiont::report
