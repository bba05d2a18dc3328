#include "fixtures.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace symbiont;
using fixtures::q;

namespace {

CostTable running_costs() {
  const Universe u = fixtures::ijk();
  CostTable t{u, {}};
  t.entries[u.coalition({"i", "j"})] = {Rational(10), Rational(6)};
  t.entries[u.coalition({"i", "k"})] = {Rational(12), Rational(7)};
  t.entries[u.coalition({"j", "k"})] = {q("9/2"), q("1/2")};
  t.entries[u.all()] = {Rational(20), Rational(14)};
  return t;
}

}  // namespace

TEST_CASE("cost differences give the game") {
  const Game g = build_isn_game(running_costs());
  const Universe& u = g.universe();
  CHECK(g.value(u.coalition({"i", "j"})) == 4);
  CHECK(same_values(g, fixtures::running_game()));
  for (AgentId a = 0; a < 3; ++a) CHECK(g.value(Coalition::singleton(a)) == 0);
}

TEST_CASE("cost tables are checked") {
  CostTable missing = running_costs();
  missing.entries.erase(missing.universe.all());
  CHECK_THROWS_AS(build_isn_game(missing), ValidationError);

  CostTable negative = running_costs();
  negative.entries.begin()->second.operational = Rational(-1);
  CHECK_THROWS_AS(build_isn_game(negative), ValidationError);

  CostTable single{Universe({"solo"}), {}};
  CHECK_THROWS_AS(build_isn_game(single), ValidationError);

  CostTable weak = running_costs();
  weak.entries[weak.universe.all()] = {Rational(3), Rational(0)};
  try {
    build_isn_game(weak);
    FAIL("expected a superadditivity violation");
  } catch (const SuperadditivityViolation& e) {
    CHECK(e.witness().first == weak.universe.coalition({"i", "j"}));
    CHECK(e.witness().second == weak.universe.coalition({"k"}));
  }
}

TEST_CASE("superadditivity witness is canonical") {
  const Universe u = fixtures::ijk();
  CHECK_FALSE(check_superadditive(fixtures::running_game()).has_value());
  const Game weak = Game::from_values(u, {{u.coalition({"i", "j"}), Rational(4)},
                                          {u.coalition({"i", "k"}), Rational(5)},
                                          {u.coalition({"j", "k"}), Rational(4)},
                                          {u.all(), Rational(3)}});
  const auto w = check_superadditive(weak);
  REQUIRE(w.has_value());
  CHECK(w->first == u.coalition({"i", "j"}));
  CHECK(w->second == u.coalition({"k"}));
}

TEST_CASE("classification by size") {
  gen::Rng rng(1);
  CHECK(classify(build_isn_game(gen::superadditive_costs(fixtures::agents(2), rng))) == IsnClass::Lambda);
  CHECK(classify(fixtures::running_game()) == IsnClass::Delta);
  CHECK_THROWS(classify(Game::from_values(Universe({"solo"}), {})));
}

TEST_CASE("running example converts to the four rules") {
  const Game explicit_game = Game::from_table(fixtures::ijk(), fixtures::running_game().table());
  const MCNet net = to_mcnet(explicit_game);
  CHECK(net.rules() == fixtures::running_net().rules());
  CHECK(net.kind() == NetKind::Basic);
}

TEST_CASE("zero game converts to an empty net") {
  const Game zero = Game::from_values(fixtures::agents(3), {{Coalition::of({0, 1}), Rational(0)},
                                                              {Coalition::of({0, 2}), Rational(0)},
                                                              {Coalition::of({1, 2}), Rational(0)},
                                                              {Coalition::of({0, 1, 2}), Rational(0)}});
  const MCNet net = to_mcnet(zero);
  CHECK(net.rules().empty());
  for (Coalition s : canonical_coalitions(3)) CHECK(value(net, s) == 0);
}

TEST_CASE("conversion round-trips and emits spanning rules") {
  gen::Rng rng(21);
  for (int k = 0; k < 40; ++k) {
    const std::size_t n = 2 + k % 6;
    const Game g = gen::superadditive_game(fixtures::agents(n), rng, k % 2 == 0);
    const MCNet net = to_mcnet(g);
    const auto expected = oracle::table_of(g);
    CHECK(oracle::net_table(n, oracle::raw_rules(net)) == expected);
    for (const auto& r : net.rules()) {
      CHECK((r.positive | r.negative) == g.grand());
      CHECK_FALSE(r.positive.intersects(r.negative));
      CHECK(r.value != 0);
    }
  }
}

TEST_CASE("generated cost tables are superadditive and normalised") {
  gen::Rng rng(4);
  for (int k = 0; k < 30; ++k) {
    const Game g = build_isn_game(gen::superadditive_costs(fixtures::agents(2 + k % 4), rng));
    CHECK_FALSE(check_superadditive(g).has_value());
    for (AgentId a = 0; a < g.size(); ++a) CHECK(g.value(Coalition::singleton(a)) == 0);
  }
}
