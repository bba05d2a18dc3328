#include "fixtures.hpp"

#include "symbiont/balanced.hpp"
#include "symbiont/cli.hpp"
#include "symbiont/io.hpp"
#include "symbiont/report.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace symbiont;
using io::Json;

namespace {

const std::string kData = SYMBIONT_DATA_DIR;
const std::string kRunning = kData + "/running-example.json";
const std::string kPolicy = kData + "/p1.json";

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json cli_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const Result r = invoke(args);
  INFO(r.err);
  return Json::parse(r.out);
}

/// Scratch directory removed at scope exit.
class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("symbiont-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    const auto file = path_ / name;
    std::ofstream(file) << text;
    return file.string();
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

std::string expect_parse_error(const Json& doc) {
  try {
    io::parse_game(doc);
  } catch (const ParseError& e) {
    return e.what();
  }
  FAIL("expected a parse error");
  return {};
}

}  // namespace

TEST_CASE("running example file round-trips") {
  const io::GameDocument doc = io::parse_game(io::read_json_file(kRunning));
  CHECK(doc.is_net());
  CHECK(same_values(doc.to_game(), fixtures::running_game()));
  const Json emitted = io::emit_game(doc);
  CHECK(io::parse_game(emitted) == doc);
  CHECK(io::dump(io::emit_game(io::parse_game(emitted))) == io::dump(emitted));
}

TEST_CASE("integer spellings parse to the same rational") {
  const Json a = {{"universe", {"i", "j"}}, {"values", {{{"coalition", {"i", "j"}}, {"value", "5"}}}}};
  const Json b = {{"universe", {"i", "j"}}, {"values", {{{"coalition", {"j", "i"}}, {"value", "5/1"}}}}};
  const Json c = {{"universe", {"i", "j"}}, {"values", {{{"coalition", {"i", "j"}}, {"value", 5}}}}};
  CHECK(io::parse_game(a) == io::parse_game(b));
  CHECK(io::parse_game(a) == io::parse_game(c));
  CHECK(io::emit_game(io::parse_game(b))["values"][0]["coalition"] == Json({"i", "j"}));
}

TEST_CASE("schema errors carry their location") {
  const Json dup = {{"universe", {"i", "j"}},
                    {"values",
                     {{{"coalition", {"i", "j"}}, {"value", "4"}}, {{"coalition", {"j", "i"}}, {"value", "5"}}}}};
  const std::string dup_msg = expect_parse_error(dup);
  CHECK(dup_msg.find("/values/1/coalition") != std::string::npos);
  CHECK(dup_msg.find("[\"j\",\"i\"]") != std::string::npos);

  CHECK(expect_parse_error({{"values", Json::array()}}).find("universe") != std::string::npos);
  CHECK(expect_parse_error({{"universe", {"i"}}}).find("exactly one") != std::string::npos);
  CHECK(expect_parse_error({{"universe", {"i"}}, {"values", Json::array()}, {"mcnet", Json::array()}})
            .find("exactly one") != std::string::npos);
  CHECK(expect_parse_error({{"universe", {"i"}}, {"values", Json::array()}, {"colour", 1}}).find("/colour") !=
        std::string::npos);
  CHECK(expect_parse_error({{"universe", {"i", "i"}}, {"values", Json::array()}}).find("/universe/1") !=
        std::string::npos);
  const Json unknown_agent = {{"universe", {"i", "j"}},
                              {"mcnet", {{{"positive", {"i", "z"}}, {"value", "1"}}}}};
  CHECK(expect_parse_error(unknown_agent).find("/mcnet/0/positive/1") != std::string::npos);
  const Json bad_value = {{"universe", {"i", "j"}}, {"values", {{{"coalition", {"i", "j"}}, {"value", "1.5"}}}}};
  CHECK(expect_parse_error(bad_value).find("/values/0/value") != std::string::npos);
  const Json overlap = {{"universe", {"i", "j"}},
                        {"mcnet", {{{"positive", {"i"}}, {"negative", {"i"}}, {"value", "1"}}}}};
  CHECK(expect_parse_error(overlap).find("/mcnet/0") != std::string::npos);
  const Json zero_basic = {{"universe", {"i"}}, {"mcnet", {{{"positive", {"i"}}, {"value", "0"}}}}};
  CHECK_THROWS_AS(io::parse_game(zero_basic), ParseError);
  Json zero_incentive = zero_basic;
  zero_incentive["kind"] = "incentive";
  CHECK_NOTHROW(io::parse_game(zero_incentive));
}

TEST_CASE("cost tables round-trip") {
  gen::Rng rng(171);
  const CostTable costs = gen::superadditive_costs(fixtures::agents(4), rng);
  const io::GameDocument doc{costs.universe, costs};
  const io::GameDocument back = io::parse_game(io::emit_game(doc));
  CHECK(back == doc);
  CHECK(same_values(back.to_game(), build_isn_game(costs)));
}

TEST_CASE("random games round-trip through both document kinds") {
  gen::Rng rng(181);
  for (int k = 0; k < 30; ++k) {
    const Universe u = fixtures::agents(1 + k % 6);
    const Game explicit_game = gen::arbitrary_game(u, rng);
    const Game reread = io::parse_game(io::emit_game(io::game_document(explicit_game))).to_game();
    CHECK(same_values(reread, explicit_game));
    const MCNet net = gen::mcnet(u, 5, rng);
    CHECK(io::parse_game(io::emit_game(io::net_document(net))) == io::net_document(net));
  }
}

TEST_CASE("policies and evidence round-trip") {
  const Universe u = fixtures::ijk();
  const Policy p = io::parse_policy(io::read_json_file(kPolicy), u);
  CHECK(p.promoted() == fixtures::policy_one().promoted());
  CHECK(p.prohibited() == fixtures::policy_one().prohibited());
  const Policy again = io::parse_policy(io::emit_policy(p), u);
  CHECK(again.promoted() == p.promoted());
  CHECK(again.default_label() == p.default_label());

  const Json clash = {{"promoted", Json::array({Json::array({"i", "j"})})}, {"prohibited", Json::array({Json::array({"j", "i"})})}};
  CHECK_THROWS_AS(io::parse_policy(clash, u), ParseError);
  const Json other = {{"universe", {"x", "y"}}, {"promoted", Json::array()}};
  CHECK_THROWS_AS(io::parse_policy(other, u), UniverseMismatch);

  const EvidenceSet e = io::parse_evidence({{"realized", Json::array({Json::array({"i", "k"})})}}, u);
  CHECK(e.realized().count(u.coalition({"i", "k"})) == 1);
  CHECK(io::parse_evidence(io::emit_evidence(e, u), u).realized() == e.realized());
  CHECK_THROWS_AS(io::parse_evidence({{"realized", Json::array({Json::array({"i", "k"}), Json::array({"k"})})}}, u), ParseError);
}

TEST_CASE("decimal approximations") {
  CHECK(report::decimal(Rational(13, 6)) == "2.166667");
  CHECK(report::decimal(Rational(-1, 3)) == "-0.333333");
  CHECK(report::decimal(Rational(5)) == "5.000000");
  CHECK(report::decimal(Rational(-1, 3000000)) == "0.000000");
  CHECK(report::decimal(Rational(1, 2), 0) == "1");
}

TEST_CASE("text and JSON reports come from the same tree") {
  report::Report rep(true);
  rep["value"] = rep.number(Rational(13, 6));
  rep["coalition"] = Json({"i", "k"});
  CHECK(rep.render(report::Format::Text) == "coalition: [i, k]\nvalue: 13/6 (~2.166667)\n");
  CHECK(Json::parse(rep.render(report::Format::Json)) == rep.tree());
}

TEST_CASE("shapley command") {
  const Result r = invoke({"shapley", kRunning});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("i: 13/6") != std::string::npos);
  CHECK(r.out.find("j: 5/3") != std::string::npos);
  CHECK(r.out.find("agree: true") != std::string::npos);

  const Json j = cli_json({"shapley", kRunning, "--method", "mcnet"});
  CHECK(j["mcnet"] == Json({{"i", "13/6"}, {"j", "5/3"}, {"k", "13/6"}}));
  CHECK_FALSE(j.contains("permutation"));
}

TEST_CASE("core command") {
  const Result r = invoke({"core", kRunning});
  CHECK(r.code == cli::kExitNegative);
  CHECK(r.out.find("core: empty") != std::string::npos);
  CHECK(r.out.find("x_i + x_j >= 4") != std::string::npos);
  CHECK(r.out.find("x_i + x_k >= 5") != std::string::npos);
  CHECK(r.out.find("x_j + x_k >= 4") != std::string::npos);
  CHECK(r.out.find("x_i + x_j + x_k = 6") != std::string::npos);

  const Result member = invoke({"core", kRunning, "--alloc", "13/6,10/6,13/6"});
  CHECK(member.code == cli::kExitNegative);
  CHECK(member.out.find("x_i + x_k >= 5") != std::string::npos);
  CHECK(invoke({"core", kRunning, "--alloc", "1,2"}).code == cli::kExitInputError);
}

TEST_CASE("regulate, compose, enforce, comply, tax and redistribute") {
  TempDir dir;
  const std::string rules = dir.file("rules.json");
  const Result reg = invoke({"regulate", kRunning, "--policy", kPolicy, "--output", rules});
  CHECK(reg.code == cli::kExitOk);
  CHECK(reg.out.find("rules: [(ij,k) -> -4, (ik,j) -> -5, (jk,i) -> -4]") != std::string::npos);
  const io::GameDocument incentive = io::parse_game(io::read_json_file(rules));
  CHECK(std::get<MCNet>(incentive.backing).kind() == NetKind::Incentive);

  const Json keep = cli_json({"regulate", kRunning, "--keep-zero"});
  CHECK(keep["rules"].size() == 4);

  const Json composed = cli_json({"compose", kRunning, "--incentives", rules});
  const Game c = io::parse_game(composed["document"]).to_game();
  CHECK(c.value(c.grand()) == 6);
  CHECK(c.value(Coalition::of({0, 2})) == 0);

  CHECK(invoke({"enforce", kRunning, "--incentives", rules, "--policy", kPolicy}).code == cli::kExitOk);
  const std::string ik = dir.write("ik.json", R"({"promoted": [["i", "k"]]})");
  CHECK(invoke({"enforce", kRunning, "--incentives", rules, "--policy", ik}).code == cli::kExitNegative);

  const std::string off = dir.write("off.json", R"({"realized": [["i", "k"]]})");
  const std::string on = dir.write("on.json", R"({"realized": [["i", "j", "k"]]})");
  CHECK(invoke({"comply", kRunning, "--policy", kPolicy, "--evidence", on}).code == cli::kExitOk);
  const Json miss = cli_json({"comply", kRunning, "--policy", kPolicy, "--evidence", off});
  CHECK(miss["missing"] == Json::array({Json::array({"i", "j", "k"})}));
  CHECK(miss["extra"] == Json::array({Json::array({"i", "k"})}));
  CHECK(cli_json({"tax", kRunning, "--incentives", rules, "--evidence", off})["tau"] == "5");

  const Json red = cli_json({"redistribute", kRunning, "--incentives", rules, "--policy", kPolicy, "--evidence", off});
  CHECK(red["residual"] == "5");
  CHECK(red["budget_balanced"] == true);
}

TEST_CASE("input errors exit with distinct messages") {
  TempDir dir;
  const Result unknown = invoke({"frobnicate", kRunning});
  CHECK(unknown.code == cli::kExitInputError);
  CHECK(unknown.err.find("unknown command 'frobnicate'") != std::string::npos);

  const std::string broken = dir.write("broken.json", R"({"universe": ["i"], "values": [)");
  const Result parse = invoke({"shapley", broken});
  CHECK(parse.code == cli::kExitInputError);
  CHECK(parse.err.find("parse error") != std::string::npos);

  const Result missing = invoke({"shapley", dir.file("absent.json")});
  CHECK(missing.code == cli::kExitInputError);

  const Result flag = invoke({"shapley", kRunning, "--method", "guess"});
  CHECK(flag.code == cli::kExitInputError);
  CHECK(flag.err.find("usage error") != std::string::npos);

  CHECK(invoke({}).code == cli::kExitInputError);
  CHECK(invoke({"--help"}).code == cli::kExitOk);

  const std::string big = dir.write("big.json", R"({"universe": ["a","b","c","d"], "values": []})");
  setenv("SYMBIONT_MAX_AGENTS", "3", 1);
  const Result cap = invoke({"shapley", big});
  setenv("SYMBIONT_MAX_AGENTS", "zero", 1);
  const Result bad_env = invoke({"shapley", kRunning});
  unsetenv("SYMBIONT_MAX_AGENTS");
  CHECK(cap.code == cli::kExitInputError);
  CHECK(cap.err.find("cap exceeded") != std::string::npos);
  CHECK(bad_env.code == cli::kExitInputError);
  CHECK(bad_env.err.find("SYMBIONT_MAX_AGENTS") != std::string::npos);
  CHECK(enumeration_cap() == kDefaultEnumerationCap);
}

TEST_CASE("validate command") {
  TempDir dir;
  CHECK(invoke({"validate", kRunning, "--policy", kPolicy}).code == cli::kExitOk);
  const std::string weak = dir.write("weak.json", R"({"universe": ["i","j","k"], "costs": [
    {"coalition": ["i","j"], "traditional": "4", "operational": "0"},
    {"coalition": ["i","k"], "traditional": "5", "operational": "0"},
    {"coalition": ["j","k"], "traditional": "4", "operational": "0"},
    {"coalition": ["i","j","k"], "traditional": "3", "operational": "0"}]})");
  const Result r = invoke({"validate", weak});
  CHECK(r.code == cli::kExitNegative);
  CHECK(r.out.find("valid: false") != std::string::npos);
  CHECK(invoke({"shapley", weak}).code == cli::kExitInputError);
}

TEST_CASE("output is deterministic and timestamps are opt-in") {
  const Result a = invoke({"core", kRunning, "--format", "json", "--approx"});
  const Result b = invoke({"core", kRunning, "--format", "json", "--approx"});
  CHECK(a.out == b.out);
  CHECK_FALSE(Json::parse(a.out).contains("timestamp"));
  CHECK(cli_json({"core", kRunning, "--timestamps"}).contains("timestamp"));
  CHECK(Json::parse(a.out)["certificate"][0]["multiplier"].contains("approx"));
}

TEST_CASE("command verdicts equal library results") {
  TempDir dir;
  gen::Rng rng(191);
  for (int k = 0; k < 25; ++k) {
    const std::size_t n = 1 + k % 4;
    const Game g = k % 2 ? gen::arbitrary_game(fixtures::agents(n), rng)
                         : gen::superadditive_game(fixtures::agents(n), rng);
    const std::string file = dir.write("g" + std::to_string(k) + ".json", io::dump(io::emit_game(io::game_document(g))));

    CHECK((invoke({"core", file}).code == cli::kExitOk) == core_feasible(g).nonempty);
    CHECK((invoke({"balanced", file}).code == cli::kExitOk) == is_balanced(g));
    CHECK((invoke({"supermodular", file}).code == cli::kExitOk) == !is_supermodular(g).has_value());

    const Json phi = cli_json({"shapley", file})["permutation"];
    const Allocation expected = shapley(g);
    for (AgentId i = 0; i < n; ++i)
      CHECK(phi[g.universe().names()[i]] == to_string(expected(static_cast<Eigen::Index>(i))));

    std::string alloc_arg;
    for (Eigen::Index i = 0; i < expected.size(); ++i) alloc_arg += (i ? "," : "") + to_string(expected(i));
    CHECK((invoke({"core", file, "--alloc", alloc_arg}).code == cli::kExitOk) ==
          !core_membership(g, expected).has_value());
  }
}

TEST_CASE("selftest command") {
  const Result r = invoke({"selftest", "--seed", "5", "--rounds", "3"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("passed: true") != std::string::npos);
  CHECK(r.out == invoke({"selftest", "--seed", "5", "--rounds", "3"}).out);
}
