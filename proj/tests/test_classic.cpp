#include "rollcall/classic.hpp"

#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "rollcall/combinatorics.hpp"
#include "rollcall/rollcall.hpp"

using namespace rollcall;

TEST_CASE("swing-based index on weighted majority games") {
  const GameTable g = game_from_weighted(3, {2, 1, 1});
  const auto phi = ssi_swings(g);
  CHECK(phi[0] == make_rational(2, 3));
  CHECK(phi[1] == make_rational(1, 6));
  CHECK(phi[2] == make_rational(1, 6));

  const auto dict = ssi_swings(game_from_weighted(1, {1, 0, 0}));
  CHECK(dict == std::vector<Rational>{Rational(1), Rational(0), Rational(0)});

  // Symmetric majority splits evenly.
  const auto maj = ssi_swings(game_from_weighted(2, {1, 1, 1}));
  CHECK(maj == std::vector<Rational>(3, make_rational(1, 3)));

  CHECK_THROWS_AS(ssi_swings(game_from_min_winning(2, 3, {{2, 3}})),
                  std::domain_error);
}

TEST_CASE("signed swing formula is not efficient off the monotone class") {
  // v = 2 only when player 1 alone votes high: the literal formula gives a
  // negative entry and the total drifts to 0.
  const GameTable g(2, 2, 2, {1, 2, 1, 1});
  const auto phi = ssi_swings(g);
  CHECK(phi[0] == make_rational(1, 2));
  CHECK(phi[1] == make_rational(-1, 2));
  CHECK(phi[0] + phi[1] == Rational(0));

  // The roll-call measure stays efficient on the same game.
  const auto rc = phi_exact(g).phi;
  CHECK(rc[0] + rc[1] == Rational(1));
}

TEST_CASE("swing coalitions are listed explicitly") {
  const GameTable g = game_from_weighted(3, {2, 1, 1});
  CHECK(swings(g, 1) ==
        std::vector<std::vector<int>>{{2}, {3}, {2, 3}});
  CHECK(swings(g, 2) == std::vector<std::vector<int>>{{1}});
  CHECK(swings(g, 3) == std::vector<std::vector<int>>{{1}});
  CHECK_THROWS_AS(swings(g, 0), std::invalid_argument);
  CHECK_THROWS_AS(swings(g, 4), std::invalid_argument);
}

TEST_CASE("all-low and all-high profiles reproduce the swing index") {
  const std::vector<GameTable> games = {
      game_from_weighted(3, {2, 1, 1}),
      game_from_weighted(2, {1, 1, 1}),
      game_from_weighted(1, {1, 0, 0}),
      game_from_weighted(4, {2, 2, 1, 1}),
  };
  for (const GameTable& g : games) {
    const auto reference = ssi_swings(g);
    CHECK(extreme_profile_average(g, 1) == reference);
    CHECK(extreme_profile_average(g, 2) == reference);
    CHECK(verify_extreme_profile_lemma(g));
  }
  CHECK_THROWS_AS(
      extreme_profile_average(game_from_weighted(3, {2, 1, 1}), 3),
      std::invalid_argument);
  CHECK_THROWS_AS(verify_extreme_profile_lemma(GameTable(2, 2, 2, {1, 2, 1, 1})),
                  std::domain_error);
}

TEST_CASE("swing counts match settled-outcome counts per high-vote class") {
  // Unanimity pair: player 1 has the single swing {2}, so the weighted side
  // is C(2,h) and the direct count agrees for every h.
  const GameTable unanimity = game_from_weighted(2, {1, 1});
  for (int h = 0; h <= 2; ++h) {
    const auto sides = key_lemma_sides(unanimity, 1, h);
    CHECK(sides.lhs == binomial(2, h));
    CHECK(sides.rhs == sides.lhs);
    CHECK(verify_key_lemma(unanimity, 1, h));
  }

  // Spot value with asymmetric weights.
  const GameTable g = game_from_weighted(3, {2, 1, 1});
  const auto sides = key_lemma_sides(g, 1, 1);
  CHECK(sides.lhs == 12);
  CHECK(sides.rhs == 12);

  for (const GameTable& game :
       {g, unanimity, game_from_weighted(2, {1, 1, 1}),
        game_from_weighted(4, {2, 2, 1, 1}),
        game_from_weighted(1, {1, 0, 0})}) {
    CHECK(verify_key_lemma(game));
  }

  CHECK_THROWS_AS(key_lemma_sides(GameTable(2, 2, 2, {1, 2, 1, 1}), 1, 0),
                  std::domain_error);
  CHECK_THROWS_AS(key_lemma_sides(g, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(key_lemma_sides(g, 0, 1), std::invalid_argument);
}

TEST_CASE("roll-call influence equals the swing index on monotone games") {
  // The headline theorem at the uniform distribution, spot-checked; the
  // randomized sweep lives in the acceptance suite.
  for (const GameTable& g :
       {game_from_weighted(3, {2, 1, 1}), game_from_weighted(2, {1, 1, 1}),
        game_from_weighted(5, {3, 2, 1, 1}),
        game_from_weighted(1, {1, 0, 0, 0})}) {
    CHECK(phi_exact(g).phi == ssi_swings(g));
  }
}
