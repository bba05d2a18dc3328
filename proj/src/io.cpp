#include "symbiont/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace symbiont::io {

namespace {

std::string child(const std::string& pointer, const std::string& key) { return pointer + "/" + key; }
std::string child(const std::string& pointer, std::size_t index) { return pointer + "/" + std::to_string(index); }

const Json& require_field(const Json& obj, const std::string& key, const std::string& pointer) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(pointer, "missing field \"" + key + "\"");
  return *it;
}

void require_object(const Json& node, const std::string& pointer) {
  if (!node.is_object()) throw ParseError(pointer, "expected an object");
}

void require_array(const Json& node, const std::string& pointer) {
  if (!node.is_array()) throw ParseError(pointer, "expected an array");
}

void reject_unknown_keys(const Json& obj, const std::set<std::string>& allowed, const std::string& pointer) {
  for (const auto& [key, _] : obj.items())
    if (!allowed.count(key)) throw ParseError(child(pointer, key), "unknown field");
}

Universe parse_universe(const Json& node, const std::string& pointer) {
  require_array(node, pointer);
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < node.size(); ++i) {
    const auto p = child(pointer, i);
    if (!node[i].is_string() || node[i].get<std::string>().empty())
      throw ParseError(p, "agent names must be non-empty strings");
    const auto name = node[i].get<std::string>();
    if (name.find(',') != std::string::npos) throw ParseError(p, "agent names cannot contain ','");
    if (!seen.insert(name).second) throw ParseError(p, "duplicate agent \"" + name + "\"");
    names.push_back(name);
  }
  if (names.size() > kMaxAgents) throw ParseError(pointer, "more than 64 agents");
  return Universe(std::move(names));
}

Json universe_json(const Universe& u) { return Json(u.names()); }

void check_declared_universe(const Json& doc, const Universe& universe, const std::string& what) {
  const auto it = doc.find("universe");
  if (it == doc.end()) return;
  if (!(parse_universe(*it, "/universe") == universe))
    throw UniverseMismatch(what + " universe does not match the game universe");
}

std::string coalition_key(const Json& node) { return node.dump(); }

std::vector<Coalition> parse_coalition_list(const Json& node, const Universe& u, const std::string& pointer) {
  require_array(node, pointer);
  std::vector<Coalition> out;
  std::set<Coalition> seen;
  for (std::size_t i = 0; i < node.size(); ++i) {
    const auto p = child(pointer, i);
    const Coalition s = parse_coalition(node[i], u, p);
    if (!seen.insert(s).second) throw ParseError(p, "duplicate coalition " + coalition_key(node[i]));
    out.push_back(s);
  }
  return out;
}

Json rational_json(const Rational& r) { return to_string(r); }

}  // namespace

Json coalition_json(const Universe& universe, Coalition s) { return Json(universe.names_of(s)); }

Coalition parse_coalition(const Json& node, const Universe& universe, const std::string& pointer) {
  require_array(node, pointer);
  Coalition s;
  for (std::size_t i = 0; i < node.size(); ++i) {
    const auto p = child(pointer, i);
    if (!node[i].is_string()) throw ParseError(p, "expected an agent name");
    const auto id = universe.find(node[i].get<std::string>());
    if (!id) throw ParseError(p, "unknown agent \"" + node[i].get<std::string>() + "\"");
    if (s.contains(*id)) throw ParseError(p, "agent \"" + node[i].get<std::string>() + "\" listed twice");
    s = s.with(*id);
  }
  return s;
}

Rational parse_rational_json(const Json& node, const std::string& pointer) {
  if (node.is_number_integer()) return parse_rational(node.dump());
  if (!node.is_string()) throw ParseError(pointer, "expected a rational string such as \"13/6\"");
  try {
    return parse_rational(node.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(pointer, e.what());
  }
}

Game GameDocument::to_game() const {
  return std::visit(
      [this](const auto& b) -> Game {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, CostTable>) return build_isn_game(b);
        else if constexpr (std::is_same_v<T, ValueMap>) return Game::from_values(universe, b);
        else return Game(b);
      },
      backing);
}

GameDocument parse_game(const Json& doc) {
  require_object(doc, "");
  reject_unknown_keys(doc, {"universe", "values", "costs", "mcnet", "kind", "description"}, "");
  const Universe u = parse_universe(require_field(doc, "universe", ""), "/universe");

  const int backings = static_cast<int>(doc.contains("values")) + static_cast<int>(doc.contains("costs")) +
                       static_cast<int>(doc.contains("mcnet"));
  if (backings != 1) throw ParseError("", "exactly one of \"values\", \"costs\" or \"mcnet\" is required");
  if (doc.contains("kind") && !doc.contains("mcnet")) throw ParseError("/kind", "only valid with \"mcnet\"");

  GameDocument out{u, ValueMap{}};
  if (doc.contains("values")) {
    const Json& list = doc["values"];
    require_array(list, "/values");
    ValueMap values;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto p = child("/values", i);
      require_object(list[i], p);
      reject_unknown_keys(list[i], {"coalition", "value"}, p);
      const Json& c = require_field(list[i], "coalition", p);
      const Coalition s = parse_coalition(c, u, child(p, "coalition"));
      if (values.count(s)) throw ParseError(child(p, "coalition"), "duplicate coalition " + coalition_key(c));
      values.emplace(s, parse_rational_json(require_field(list[i], "value", p), child(p, "value")));
    }
    out.backing = std::move(values);
  } else if (doc.contains("costs")) {
    const Json& list = doc["costs"];
    require_array(list, "/costs");
    CostTable costs{u, {}};
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto p = child("/costs", i);
      require_object(list[i], p);
      reject_unknown_keys(list[i], {"coalition", "traditional", "operational"}, p);
      const Json& c = require_field(list[i], "coalition", p);
      const Coalition s = parse_coalition(c, u, child(p, "coalition"));
      if (costs.entries.count(s)) throw ParseError(child(p, "coalition"), "duplicate coalition " + coalition_key(c));
      Costs entry{parse_rational_json(require_field(list[i], "traditional", p), child(p, "traditional")),
                  parse_rational_json(require_field(list[i], "operational", p), child(p, "operational"))};
      costs.entries.emplace(s, std::move(entry));
    }
    out.backing = std::move(costs);
  } else {
    NetKind kind = NetKind::Basic;
    if (doc.contains("kind")) {
      const Json& k = doc["kind"];
      if (k == "basic") kind = NetKind::Basic;
      else if (k == "incentive") kind = NetKind::Incentive;
      else throw ParseError("/kind", "expected \"basic\" or \"incentive\"");
    }
    const Json& list = doc["mcnet"];
    require_array(list, "/mcnet");
    std::vector<Rule> rules;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto p = child("/mcnet", i);
      require_object(list[i], p);
      reject_unknown_keys(list[i], {"positive", "negative", "value"}, p);
      Rule r;
      r.positive = parse_coalition(require_field(list[i], "positive", p), u, child(p, "positive"));
      r.negative = list[i].contains("negative")
                       ? parse_coalition(list[i]["negative"], u, child(p, "negative"))
                       : Coalition{};
      r.value = parse_rational_json(require_field(list[i], "value", p), child(p, "value"));
      rules.push_back(std::move(r));
    }
    MCNet net(u, std::move(rules), kind);
    const auto violations = validate(net);
    if (!violations.empty())
      throw ParseError(child("/mcnet", violations.front().rule), violations.front().message);
    out.backing = std::move(net);
  }
  return out;
}

Json emit_game(const GameDocument& doc) {
  const Universe& u = doc.universe;
  Json out = Json::object();
  out["universe"] = universe_json(u);
  std::visit(
      [&](const auto& b) {
        using T = std::decay_t<decltype(b)>;
        Json list = Json::array();
        if constexpr (std::is_same_v<T, CostTable>) {
          std::map<Coalition, const Costs*, SizeThenCanonical> sorted;
          for (const auto& [s, c] : b.entries) sorted.emplace(s, &c);
          for (const auto& [s, c] : sorted)
            list.push_back({{"coalition", coalition_json(u, s)},
                            {"traditional", rational_json(c->traditional)},
                            {"operational", rational_json(c->operational)}});
          out["costs"] = std::move(list);
        } else if constexpr (std::is_same_v<T, ValueMap>) {
          std::map<Coalition, const Rational*, SizeThenCanonical> sorted;
          for (const auto& [s, v] : b) sorted.emplace(s, &v);
          for (const auto& [s, v] : sorted)
            list.push_back({{"coalition", coalition_json(u, s)}, {"value", rational_json(*v)}});
          out["values"] = std::move(list);
        } else {
          for (const auto& r : b.rules())
            list.push_back({{"positive", coalition_json(u, r.positive)},
                            {"negative", coalition_json(u, r.negative)},
                            {"value", rational_json(r.value)}});
          out["mcnet"] = std::move(list);
          out["kind"] = b.kind() == NetKind::Basic ? "basic" : "incentive";
        }
      },
      doc.backing);
  return out;
}

GameDocument game_document(const Game& game) {
  if (const auto* net = game.mcnet()) return net_document(*net);
  ValueMap values;
  for (const auto& [s, v] : game.values())
    if (s.size() >= 2 || (s.size() == 1 && v != 0)) values.emplace(s, v);
  return GameDocument{game.universe(), std::move(values)};
}

GameDocument net_document(const MCNet& net) { return GameDocument{net.universe(), net}; }

Policy parse_policy(const Json& doc, const Universe& universe) {
  require_object(doc, "");
  reject_unknown_keys(doc, {"universe", "promoted", "prohibited", "default", "description"}, "");
  check_declared_universe(doc, universe, "policy");
  auto read = [&](const char* key) {
    CoalitionSet out;
    if (!doc.contains(key)) return out;
    for (Coalition s : parse_coalition_list(doc[key], universe, std::string("/") + key)) {
      if (s.empty()) throw ParseError(std::string("/") + key, "the empty coalition cannot be labelled");
      out.insert(s);
    }
    return out;
  };
  CoalitionSet promoted = read("promoted");
  CoalitionSet prohibited = read("prohibited");
  PolicyLabel fallback = PolicyLabel::Permitted;
  if (doc.contains("default")) {
    if (!doc["default"].is_string()) throw ParseError("/default", "expected a label string");
    try {
      fallback = parse_policy_label(doc["default"].get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError("/default", e.what());
    }
  }
  for (Coalition s : promoted)
    if (prohibited.count(s))
      throw ParseError("/prohibited", "coalition " + coalition_json(universe, s).dump() + " is also promoted");
  return Policy(universe, std::move(promoted), std::move(prohibited), fallback);
}

Json emit_policy(const Policy& policy) {
  const Universe& u = policy.universe();
  Json promoted = Json::array(), prohibited = Json::array();
  for (Coalition s : policy.promoted()) promoted.push_back(coalition_json(u, s));
  for (Coalition s : policy.prohibited()) prohibited.push_back(coalition_json(u, s));
  return Json{{"universe", universe_json(u)},
              {"promoted", promoted},
              {"prohibited", prohibited},
              {"default", to_string(policy.default_label())}};
}

EvidenceSet parse_evidence(const Json& doc, const Universe& universe) {
  require_object(doc, "");
  reject_unknown_keys(doc, {"universe", "realized", "description"}, "");
  check_declared_universe(doc, universe, "evidence");
  const auto list = parse_coalition_list(require_field(doc, "realized", ""), universe, "/realized");
  try {
    return EvidenceSet(universe, list);
  } catch (const ValidationError& e) {
    throw ParseError("/realized", e.what());
  }
}

Json emit_evidence(const EvidenceSet& evidence, const Universe& universe) {
  Json realized = Json::array();
  for (Coalition s : evidence.realized()) realized.push_back(coalition_json(universe, s));
  return Json{{"universe", universe_json(universe)}, {"realized", realized}};
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("", "cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw ParseError("", path.string() + ": " + e.what());
  }
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace symbiont::io
