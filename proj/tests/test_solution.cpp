#include "fixtures.hpp"
#include "oracles.hpp"

#include "symbiont/balanced.hpp"

#include <doctest.h>

using namespace symbiont;
using fixtures::alloc;
using fixtures::q;

namespace {

std::vector<Rational> as_vector(const Allocation& x) { return {x.begin(), x.end()}; }

/// Pairs 0, grand coalition 6.
Game example_five_cisn() {
  const Universe u = fixtures::ijk();
  return Game::from_values(u, {{u.coalition({"i", "j"}), Rational(0)},
                               {u.coalition({"i", "k"}), Rational(0)},
                               {u.coalition({"j", "k"}), Rational(0)},
                               {u.all(), Rational(6)}});
}

Game relabel(const Game& g, const std::vector<AgentId>& perm) {
  std::vector<Rational> table(std::size_t{1} << g.size());
  for (Coalition s : canonical_coalitions(g.size())) {
    Coalition image;
    for (AgentId a : s.members()) image = image.with(perm[a]);
    table[image.bits()] = g.value(s);
  }
  return Game::from_table(g.universe(), std::move(table));
}

}  // namespace

TEST_CASE("running example Shapley value") {
  const Allocation expected = alloc({"13/6", "10/6", "13/6"});
  CHECK(shapley_permutation(fixtures::running_game()) == expected);
  CHECK(shapley_mcnet(fixtures::running_net()) == expected);
  CHECK(shapley(fixtures::running_game()) == expected);
  CHECK(as_vector(expected) == oracle::shapley_orders(oracle::table_of(fixtures::running_game()), 3));
}

TEST_CASE("Shapley value of simple games") {
  const Universe u = fixtures::ijk();
  CHECK(shapley_permutation(Game::from_values(u, {{Coalition::of({0, 1}), Rational(0)},
                                                  {Coalition::of({0, 2}), Rational(0)},
                                                  {Coalition::of({1, 2}), Rational(0)},
                                                  {u.all(), Rational(0)}})) == zero_allocation(3));
  CHECK(shapley_permutation(example_five_cisn()) == alloc({"2", "2", "2"}));
  const MCNet single(u, {{u.coalition({"i"}), Coalition{}, Rational(7)}});
  CHECK(shapley_mcnet(single) == alloc({"7", "0", "0"}));
  const MCNet with_zero(u, {{u.coalition({"i"}), Coalition{}, Rational(0)}}, NetKind::Incentive);
  CHECK(shapley_mcnet(with_zero) == zero_allocation(3));
  CHECK_THROWS_AS(shapley_permutation(Game(MCNet(fixtures::agents(11), {}))), CapExceeded);
}

TEST_CASE("rule-wise Shapley matches the ordering oracle") {
  gen::Rng rng(31);
  for (int k = 0; k < 40; ++k) {
    const std::size_t n = 1 + k % 7;
    const MCNet net = gen::mcnet(fixtures::agents(n), 1 + static_cast<std::size_t>(k % 12), rng);
    const auto expected = oracle::shapley_orders(oracle::net_table(n, oracle::raw_rules(net)), n);
    CHECK(as_vector(shapley_mcnet(net)) == expected);
    CHECK(as_vector(shapley_permutation(Game(net))) == expected);
  }
}

TEST_CASE("Shapley axioms") {
  gen::Rng rng(41);
  for (int k = 0; k < 25; ++k) {
    const std::size_t n = 2 + k % 5;
    const Universe u = fixtures::agents(n);
    const Game v = gen::arbitrary_game(u, rng), w = gen::arbitrary_game(u, rng);
    const Allocation phi = shapley(v);

    // Efficiency.
    CHECK(phi.sum() == v.value(v.grand()));

    // Additivity.
    CHECK(shapley(v + w) == phi + shapley(w));

    // Relabelling permutes the allocation.
    std::vector<AgentId> perm(n);
    for (AgentId a = 0; a < n; ++a) perm[a] = (a + 1) % n;
    const Allocation moved = shapley(relabel(v, perm));
    for (AgentId a = 0; a < n; ++a)
      CHECK(moved(static_cast<Eigen::Index>(perm[a])) == phi(static_cast<Eigen::Index>(a)));

    // Symmetry: make agents 0 and 1 interchangeable.
    std::vector<Rational> table = v.table();
    for (Coalition s : canonical_coalitions(n))
      if (s.contains(1) && !s.contains(0)) table[s.bits()] = table[s.without(1).with(0).bits()];
    const Allocation sym = shapley(Game::from_table(u, table));
    CHECK(sym(0) == sym(1));

    // Dummy: agent n-1 adds exactly v({n-1}) everywhere.
    const AgentId d = static_cast<AgentId>(n - 1);
    const Rational own = gen::rational(rng);
    std::vector<Rational> dummy = v.table();
    for (Coalition s : canonical_coalitions(n))
      if (s.contains(d)) dummy[s.bits()] = dummy[s.without(d).bits()] + own;
    CHECK(shapley(Game::from_table(u, dummy))(static_cast<Eigen::Index>(d)) == own);
  }
}

TEST_CASE("core membership reports the worst violation") {
  const Game g = fixtures::running_game();
  const auto v = core_membership(g, alloc({"13/6", "10/6", "13/6"}));
  REQUIRE(v.has_value());
  CHECK(v->kind == CoreViolation::Kind::Rationality);
  CHECK(v->coalition == g.universe().coalition({"i", "k"}));
  CHECK(v->deficit == q("2/3"));

  CHECK_FALSE(core_membership(example_five_cisn(), alloc({"2", "2", "2"})).has_value());
  CHECK(oracle::in_core(oracle::table_of(example_five_cisn()), 3, {Rational(2), Rational(2), Rational(2)}));

  const auto eff = core_membership(example_five_cisn(), alloc({"1", "2", "2"}));
  REQUIRE(eff.has_value());
  CHECK(eff->kind == CoreViolation::Kind::Efficiency);
  CHECK(eff->deficit == 1);
  CHECK_THROWS_AS(core_membership(g, alloc({"1", "2"})), ValidationError);
}

TEST_CASE("running example core is empty with a certificate") {
  const Game g = fixtures::running_game();
  const CoreVerdict verdict = core_feasible(g);
  CHECK_FALSE(verdict.nonempty);
  CHECK(verdict.gap > 0);
  // Weighted rows sum to a zero left-hand side and a positive right-hand side.
  std::vector<Rational> lhs(3, Rational(0));
  Rational rhs(0);
  for (const auto& term : verdict.certificate) {
    CHECK(term.multiplier != 0);
    if (!term.efficiency) CHECK(term.multiplier > 0);
    for (AgentId a : term.coalition.members()) lhs[a] += term.multiplier;
    rhs += term.multiplier * g.value(term.coalition);
  }
  CHECK(lhs == std::vector<Rational>(3, Rational(0)));
  CHECK(rhs == verdict.gap);
  REQUIRE(verdict.certificate.size() == 4);
  CHECK(verdict.certificate.back().efficiency);
  CHECK(verdict.certificate.back().coalition == g.grand());
}

TEST_CASE("core witnesses are core members") {
  const Game zero = Game::from_values(fixtures::agents(2), {{Coalition::of({0, 1}), Rational(0)}});
  const CoreVerdict z = core_feasible(zero);
  REQUIRE(z.nonempty);
  CHECK(*z.witness == zero_allocation(2));

  gen::Rng rng(51);
  for (int k = 0; k < 60; ++k) {
    const std::size_t n = 1 + k % 4;
    const Game g = k % 3 == 0 ? gen::superadditive_game(fixtures::agents(n), rng) : gen::arbitrary_game(fixtures::agents(n), rng);
    const CoreVerdict verdict = core_feasible(g);
    CHECK(verdict.nonempty == oracle::core_nonempty_fm(oracle::table_of(g), n));
    if (verdict.nonempty) {
      CHECK_FALSE(core_membership(g, *verdict.witness).has_value());
      CHECK(oracle::in_core(oracle::table_of(g), n, as_vector(*verdict.witness)));
    }
    CHECK(is_balanced(g) == verdict.nonempty);
  }
}

TEST_CASE("balanced vectors") {
  const Game g = fixtures::running_game();
  CHECK_FALSE(is_balanced(g));
  const auto lambda = violating_balanced_vector(g);
  REQUIRE(lambda.has_value());
  CHECK(is_balanced_vector(3, *lambda));
  CHECK(balanced_excess(g, *lambda) == q("1/2"));
  REQUIRE(lambda->weights.size() == 3);
  for (const auto& [s, w] : lambda->weights) {
    CHECK(s.size() == 2);
    CHECK(w == q("1/2"));
  }

  const Universe u = fixtures::ijk();
  ValueMap additive;
  for (Coalition s : canonical_coalitions(3)) additive[s] = Rational(static_cast<long>(s.size()));
  CHECK(is_balanced(Game::from_values(u, additive)));

  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& v : balanced_vertices(n)) CHECK(is_balanced_vector(n, v));
  CHECK(balanced_vertices(3).size() == 6);  // {N}, singletons, three pair+singleton splits, pairs at 1/2
}

TEST_CASE("supermodularity witness") {
  const Game g = fixtures::running_game();
  const auto w = is_supermodular(g);
  REQUIRE(w.has_value());
  CHECK(w->first == g.universe().coalition({"i", "j"}));
  CHECK(w->second == g.universe().coalition({"i", "k"}));
  CHECK_FALSE(is_supermodular(example_five_cisn()).has_value());
}

TEST_CASE("two-agent ISN games are supermodular, balanced and fairly stable") {
  gen::Rng rng(61);
  for (int k = 0; k < 100; ++k) {
    const Game g = build_isn_game(gen::superadditive_costs(fixtures::agents(2), rng));
    CHECK_FALSE(is_supermodular(g).has_value());
    CHECK(is_balanced(g));
    CHECK(core_feasible(g).nonempty);
    const Implementability imp = check_implementable(g);
    CHECK(imp.stable);
    CHECK(imp.fair_and_stable);
  }
}

TEST_CASE("supermodular games keep the Shapley value in the core") {
  // Positive unanimity rules always give a supermodular game.
  gen::Rng rng(71);
  for (int k = 0; k < 30; ++k) {
    const std::size_t n = 2 + k % 4;
    const MCNet base = gen::mcnet(fixtures::agents(n), 4, rng);
    std::vector<Rule> rules;
    for (const auto& r : base.rules())
      rules.push_back({r.positive, Coalition{}, r.value < 0 ? Rational(-r.value) : r.value});
    const Game g(MCNet(fixtures::agents(n), rules));
    CHECK_FALSE(is_supermodular(g).has_value());
    CHECK(is_balanced(g));
    CHECK_FALSE(core_membership(g, shapley(g)).has_value());
  }
}

TEST_CASE("implementability of the worked games") {
  const Implementability running = check_implementable(fixtures::running_game());
  CHECK_FALSE(running.stable);
  CHECK_FALSE(running.fair_and_stable);
  const Implementability cisn = check_implementable(example_five_cisn());
  CHECK(cisn.stable);
  CHECK(cisn.fair_and_stable);
}

TEST_CASE("fair and stable implies stable") {
  gen::Rng rng(81);
  for (int k = 0; k < 40; ++k) {
    const Implementability imp = check_implementable(gen::arbitrary_game(fixtures::agents(1 + k % 4), rng));
    if (imp.fair_and_stable) CHECK(imp.stable);
  }
}
