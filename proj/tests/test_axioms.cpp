#include "rollcall/axioms.hpp"

#include <stdexcept>

#include "doctest.h"
#include "rollcall/classic.hpp"
#include "rollcall/errors.hpp"
#include "rollcall/rollcall.hpp"

using namespace rollcall;

TEST_CASE("efficiency holds whenever two outputs are reachable") {
  CHECK(check_efficiency(game_from_weighted(3, {2, 1, 1})));
  CHECK(check_efficiency(game_from_min_winning(3, 4, {{2, 3, 4}})));
  CHECK(check_efficiency(GameTable(2, 2, 3, {1, 3, 2, 3})));
  // Even off the monotone class.
  CHECK(check_efficiency(GameTable(3, 2, 2, {1, 1, 2, 1, 2, 1, 1, 1})));
  CHECK(check_efficiency(GameTable(2, 2, 2, {1, 2, 1, 1})));
  CHECK_THROWS_AS(check_efficiency(constant_game(2, 2, 2, 1)),
                  std::domain_error);
}

TEST_CASE("relabeling players transports influence") {
  const GameTable g = game_from_weighted(3, {2, 1, 1});
  // Swap and full reversal...
  CHECK(check_anonymity(g, CallOrder{{2, 1, 3}}));
  CHECK(check_anonymity(g, CallOrder{{3, 2, 1}}));
  // ...and a 3-cycle, which distinguishes the transport direction.
  CHECK(check_anonymity(g, CallOrder{{2, 3, 1}}));
  CHECK(check_anonymity(g, CallOrder{{3, 1, 2}}));

  // Pin the direction explicitly: sigma = (2,3,1) hands player 1's old role
  // (the heavy seat, influence 2/3) to player sigma(1) = 2.
  const auto moved = phi_exact(permute_game(g, CallOrder{{2, 3, 1}})).phi;
  CHECK(moved[0] == make_rational(1, 6));
  CHECK(moved[1] == make_rational(2, 3));
  CHECK(moved[2] == make_rational(1, 6));

  // Also on a non-monotone game.
  const GameTable nm(3, 2, 2, {1, 1, 2, 1, 2, 1, 1, 1});
  CHECK(check_anonymity(nm, CallOrder{{2, 3, 1}}));
  CHECK(check_anonymity(nm, CallOrder{{1, 3, 2}}));
}

TEST_CASE("appending an ignored player changes nothing") {
  CHECK(check_null_player_extension(game_from_weighted(3, {2, 1, 1})));
  CHECK(check_null_player_extension(GameTable(2, 2, 3, {1, 3, 2, 3})));
  CHECK(check_null_player_extension(GameTable(2, 2, 2, {1, 2, 1, 1})));
}

TEST_CASE("transfer identity on admissible pairs") {
  const GameTable majority = game_from_weighted(2, {1, 1, 1});
  const GameTable dictator = game_from_weighted(1, {1, 0, 0});
  CHECK(transfer_admissible(majority));
  CHECK(transfer_admissible(dictator));
  CHECK(transfer_pair_admissible(majority, dictator));
  CHECK(check_transfer(majority, dictator));

  const GameTable veto = game_from_weighted(3, {2, 1, 1});
  CHECK(check_transfer(majority, veto));
  CHECK(check_transfer(veto, dictator));

  // Idempotent pair: join == meet == the game itself.
  CHECK(check_transfer(veto, veto));
}

TEST_CASE("inadmissible games are refused, not silently accepted") {
  // Monotone and surjective but with a gapped reachable set.
  const GameTable gapped(2, 2, 3, {1, 3, 2, 3});
  CHECK(!transfer_admissible(gapped));
  // Non-monotone.
  CHECK(!transfer_admissible(GameTable(3, 2, 2, {1, 1, 2, 1, 2, 1, 1, 1})));
  // Not surjective.
  CHECK(!transfer_admissible(constant_game(2, 2, 2, 1)));
  CHECK(!transfer_admissible(GameTable(2, 2, 3, {1, 1, 1, 3})));

  CHECK(!transfer_pair_admissible(gapped, gapped));
  CHECK_THROWS_AS(check_transfer(gapped, gapped), std::domain_error);
  // Shape mismatch is inadmissible rather than an indexing accident.
  CHECK(!transfer_pair_admissible(game_from_weighted(2, {1, 1, 1}),
                                  game_from_weighted(2, {1, 1})));
}

TEST_CASE("rebuilding influence from the transfer identity alone") {
  const std::vector<GameTable> games = {
      game_from_min_winning(3, 4, {{2, 3, 4}}),
      game_from_weighted(3, {2, 1, 1}),
      game_from_weighted(2, {1, 1, 1}),
      game_from_weighted(3, {2, 2, 1, 1}),
      game_from_min_winning(3, 3, {{3, 1, 1}, {1, 2, 2}}),
  };
  for (const GameTable& g : games) {
    CHECK(recursive_phi_via_transfer(g) == phi_exact(g).phi);
  }

  // The recursion budget guards against exponential blowup.
  CHECK_THROWS_AS(
      recursive_phi_via_transfer(game_from_weighted(2, {1, 1, 1}),
                                 /*max_nodes=*/2),
      enumeration_guard_error);
}

TEST_CASE("axioms accept a caller-supplied influence map") {
  // Feeding the classic swing index through the same harness: efficient and
  // anonymous on monotone (2,2) games.
  const InfluenceMap classic = [](const GameTable& g) {
    return ssi_swings(g);
  };
  const GameTable g = game_from_weighted(3, {2, 1, 1});
  CHECK(check_efficiency(g, classic));
  CHECK(check_anonymity(g, CallOrder{{2, 3, 1}}, classic));
  CHECK(check_null_player_extension(g, classic));
  CHECK(check_transfer(game_from_weighted(2, {1, 1, 1}), g, classic));
}
