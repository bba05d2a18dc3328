#pragma once

#include "symbiont/isn.hpp"
#include "symbiont/policy.hpp"
#include "symbiont/redistribution.hpp"

#include <json.hpp>

#include <filesystem>
#include <variant>

namespace symbiont::io {

using Json = nlohmann::json;

/// Parsed game file. Exactly one backing: cost data, explicit values, or an
/// MC-net (basic or incentive).
struct GameDocument {
  Universe universe;
  std::variant<CostTable, ValueMap, MCNet> backing;

  /// Builds the game, running the model checks of the backing (ISN
  /// construction for costs, table completeness for values).
  Game to_game() const;
  bool is_net() const { return std::holds_alternative<MCNet>(backing); }

  friend bool operator==(const GameDocument&, const GameDocument&) = default;
};

/// Schema (coalitions are arrays of agent names, rationals are "p/q" or
/// integer strings; JSON integers are also accepted):
///
///   { "universe": ["i", "j", "k"],
///     "values": [ {"coalition": ["i","j"], "value": "4"}, ... ] }
///   { "universe": [...],
///     "costs":  [ {"coalition": [...], "traditional": "10", "operational": "6"} ] }
///   { "universe": [...], "kind": "basic" | "incentive",
///     "mcnet":  [ {"positive": [...], "negative": [...], "value": "4"} ] }
///
/// Errors carry the JSON pointer of the offending field.
GameDocument parse_game(const Json& doc);
Json emit_game(const GameDocument& doc);

/// Explicit games become a values document (entries of size >= 2 plus non-zero
/// singletons); MC-net games become an mcnet document.
GameDocument game_document(const Game& game);
GameDocument net_document(const MCNet& net);

///   { "universe": [...]?, "promoted": [[...], ...], "prohibited": [[...], ...],
///     "default": "permitted" | "prohibited" | "promoted" }
Policy parse_policy(const Json& doc, const Universe& universe);
Json emit_policy(const Policy& policy);

///   { "universe": [...]?, "realized": [[...], ...] }
EvidenceSet parse_evidence(const Json& doc, const Universe& universe);
Json emit_evidence(const EvidenceSet& evidence, const Universe& universe);

/// Agent names in ascending id order.
Json coalition_json(const Universe& universe, Coalition s);
Coalition parse_coalition(const Json& node, const Universe& universe, const std::string& pointer);
Rational parse_rational_json(const Json& node, const std::string& pointer);

/// Reads and parses a JSON file; ParseError on I/O or syntax errors.
Json read_json_file(const std::filesystem::path& path);

/// Sorted keys, two-space indent, trailing newline.
std::string dump(const Json& doc);

}  // namespace symbiont::io
