#include "rollcall/game.hpp"

#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "rollcall/errors.hpp"

using namespace rollcall;

namespace {

// Running example used throughout: three players with 4 input levels,
// winning exactly when the votes dominate (2,3,4).
GameTable worked_example() {
  return game_from_min_winning(3, 4, {{2, 3, 4}});
}

}  // namespace

TEST_CASE("profile indexing is mixed-radix with player 1 least significant") {
  CHECK(profile_index({2, 3, 4}, 4) == 1 + 2 * 4 + 3 * 16);
  CHECK(profile_index({1, 1, 1}, 4) == 0);
  CHECK(profile_index({4, 4, 4}, 4) == 63);
  for (std::size_t idx = 0; idx < 64; ++idx) {
    const VoteProfile a = profile_from_index(idx, 3, 4);
    CHECK(profile_index(a, 4) == idx);
  }
  CHECK_THROWS_AS(profile_index({0, 1, 1}, 4), std::invalid_argument);
  CHECK_THROWS_AS(profile_index({1, 1, 5}, 4), std::invalid_argument);
  CHECK_THROWS_AS(profile_from_index(64, 3, 4), std::invalid_argument);
}

TEST_CASE("checked_table_size guards astronomically large tables") {
  CHECK(checked_table_size(3, 4) == 64);
  CHECK(checked_table_size(10, 2) == 1024);
  CHECK_THROWS_AS(checked_table_size(30, 10), enumeration_guard_error);
  CHECK_THROWS_AS(checked_table_size(64, 2), enumeration_guard_error);
}

TEST_CASE("call orders validate and invert") {
  const CallOrder id = CallOrder::identity(4);
  CHECK(id.seq == std::vector<int>{1, 2, 3, 4});
  CHECK(id.valid());
  CHECK(!CallOrder{{1, 1, 2}}.valid());
  CHECK(!CallOrder{{0, 1, 2}}.valid());

  const CallOrder o{{3, 1, 4, 2}};
  const std::vector<int> pos = o.positions();
  // Player 3 speaks first, player 1 second, ...
  CHECK(pos == std::vector<int>{2, 4, 1, 3});
  CHECK(CallOrder{pos}.positions() == o.seq);
}

TEST_CASE("game table construction and lookups") {
  // Two players, two input levels, three output levels.
  const GameTable g(2, 2, 3, {1, 3, 2, 3});
  CHECK(g.value({1, 1}) == 1);
  CHECK(g.value({2, 1}) == 3);
  CHECK(g.value({1, 2}) == 2);
  CHECK(g.value({2, 2}) == 3);
  CHECK(g.table_size() == 4);

  CHECK_THROWS_AS(GameTable(2, 2, 2, {1, 2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(GameTable(2, 2, 2, {1, 2, 1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(GameTable(2, 2, 2, {1, 2, 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(GameTable(0, 2, 2, {}), std::invalid_argument);
}

TEST_CASE("minimal-winning constructor expands the dominance rule") {
  const GameTable g = worked_example();
  CHECK(g.value({2, 3, 4}) == 2);
  CHECK(g.value({4, 4, 4}) == 2);
  CHECK(g.value({3, 3, 4}) == 2);
  CHECK(g.value({1, 4, 4}) == 1);  // player 1 below threshold
  CHECK(g.value({2, 2, 4}) == 1);
  CHECK(g.value({2, 3, 3}) == 1);
  CHECK(is_monotonic(g));

  // Comparable vectors are rejected: (2,3,4) dominates (1,3,4).
  CHECK_THROWS_AS(game_from_min_winning(3, 4, {{2, 3, 4}, {1, 3, 4}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(game_from_min_winning(3, 4, {{2, 3}}),
                  std::invalid_argument);
}

TEST_CASE("weighted majority constructor") {
  const GameTable g = game_from_weighted(3, {2, 1, 1});
  CHECK(g.n() == 3);
  CHECK(g.j() == 2);
  CHECK(g.k() == 2);
  CHECK(g.value({2, 2, 1}) == 2);  // weight 3 meets quota
  CHECK(g.value({2, 1, 2}) == 2);
  CHECK(g.value({2, 1, 1}) == 1);  // weight 2 misses
  CHECK(g.value({1, 2, 2}) == 1);
  CHECK(g.value({2, 2, 2}) == 2);
  CHECK(is_monotonic(g));
  CHECK_THROWS_AS(game_from_weighted(1, {2, -1}), std::invalid_argument);
}

TEST_CASE("structure predicates") {
  const GameTable g(2, 2, 3, {1, 3, 2, 3});
  CHECK(image_size(g) == 3);
  CHECK(is_surjective(g));

  const GameTable gap(2, 2, 3, {1, 3, 1, 3});  // output 2 never reached
  CHECK(image_size(gap) == 2);
  CHECK(!is_surjective(gap));

  CHECK(image_size(constant_game(3, 2, 2, 1)) == 1);

  // Non-monotone example: flipping player 2's vote alone can lower output.
  const GameTable nm(3, 2, 2, {1, 1, 2, 1, 2, 1, 1, 1});
  CHECK(!is_monotonic(nm));
  CHECK(is_monotonic(game_from_weighted(3, {2, 1, 1})));
}

TEST_CASE("null players and equivalent players") {
  const GameTable dict = game_from_weighted(1, {1, 0, 0});
  CHECK(!is_null_player(dict, 1));
  CHECK(is_null_player(dict, 2));
  CHECK(is_null_player(dict, 3));

  const GameTable g = game_from_weighted(3, {2, 1, 1});
  CHECK(!is_null_player(g, 1));
  CHECK(are_equivalent(g, 2, 3));
  CHECK(!are_equivalent(g, 1, 2));
  CHECK_THROWS_AS(is_null_player(g, 0), std::invalid_argument);
  CHECK_THROWS_AS(are_equivalent(g, 1, 4), std::invalid_argument);
}

TEST_CASE("minimal winning and maximal losing vectors") {
  const GameTable g = worked_example();
  CHECK(minimal_winning_vectors(g) ==
        std::vector<VoteProfile>{{2, 3, 4}});
  // Highest profiles that still lose, scanned in table order.
  CHECK(maximal_losing_vectors(g) ==
        std::vector<VoteProfile>{{4, 4, 3}, {4, 2, 4}, {1, 4, 4}});

  // Rebuilding from the extracted antichain reproduces the table.
  const GameTable back = game_from_min_winning(3, 4, minimal_winning_vectors(g));
  CHECK(back == g);

  CHECK_THROWS_AS(minimal_winning_vectors(GameTable(2, 2, 3, {1, 3, 2, 3})),
                  std::domain_error);
  CHECK_THROWS_AS(
      minimal_winning_vectors(GameTable(3, 2, 2, {1, 1, 2, 1, 2, 1, 1, 1})),
      std::domain_error);
}

TEST_CASE("join and meet are pointwise extrema") {
  const GameTable u = game_from_weighted(2, {1, 1, 1});  // two of three
  const GameTable w = game_from_weighted(1, {1, 0, 0});  // dictator 1
  const GameTable uw = join(u, w);
  const GameTable iw = meet(u, w);
  for (std::size_t idx = 0; idx < u.table_size(); ++idx) {
    CHECK(uw.value_at(idx) == std::max(u.value_at(idx), w.value_at(idx)));
    CHECK(iw.value_at(idx) == std::min(u.value_at(idx), w.value_at(idx)));
  }
  CHECK(is_monotonic(uw));
  CHECK(is_monotonic(iw));
  CHECK_THROWS_AS(join(u, GameTable(2, 2, 2, {1, 1, 1, 2})),
                  std::invalid_argument);
}

TEST_CASE("relabeling players rearranges the table") {
  // Dictator game on player 1; after applying sigma = (2 3 1), slot 1 reads
  // player 2's vote... old role of player i is taken by sigma(i), so the
  // dictator role (slot 1) goes to player sigma(1) = 2.
  const GameTable dict = game_from_weighted(1, {1, 0, 0});
  const GameTable moved = permute_game(dict, CallOrder{{2, 3, 1}});
  CHECK(is_null_player(moved, 1));
  CHECK(!is_null_player(moved, 2));
  CHECK(is_null_player(moved, 3));

  // Identity is a no-op; applying a permutation then its inverse returns.
  const GameTable g = worked_example();
  CHECK(permute_game(g, CallOrder::identity(3)) == g);
  const CallOrder sigma{{3, 1, 2}};
  const CallOrder inverse{sigma.positions()};
  CHECK(permute_game(permute_game(g, sigma), inverse) == g);
  CHECK_THROWS_AS(permute_game(g, CallOrder{{1, 2}}), std::invalid_argument);
}

TEST_CASE("appending an ignored player") {
  const GameTable g = game_from_weighted(3, {2, 1, 1});
  const GameTable ext = add_null_player(g);
  CHECK(ext.n() == 4);
  CHECK(is_null_player(ext, 4));
  for (std::size_t idx = 0; idx < g.table_size(); ++idx) {
    const VoteProfile a = profile_from_index(idx, 3, 2);
    VoteProfile b = a;
    b.push_back(1);
    CHECK(ext.value(b) == g.value(a));
    b.back() = 2;
    CHECK(ext.value(b) == g.value(a));
  }
}

TEST_CASE("reachable sets agree with literal scans") {
  const GameTable g(2, 2, 3, {1, 3, 2, 3});
  const ReachableSets rs(g);
  // All free: whole image.
  CHECK(rs.count(0) == 3);
  CHECK(rs.lowest(0) == 1);
  CHECK(rs.highest(0) == 3);
  // Player 1 fixed to 2: outputs {3}.
  const std::size_t key1 = 2 * rs.key_step(1);
  CHECK(rs.count(key1) == 1);
  CHECK(rs.lowest(key1) == 3);
  // Player 1 fixed to 1: outputs {1, 2}.
  const std::size_t key2 = 1 * rs.key_step(1);
  CHECK(rs.count(key2) == 2);
  CHECK(rs.is_interval_at(key2));
  CHECK(rs.lowest(key2) == 1);
  CHECK(rs.highest(key2) == 2);
}

TEST_CASE("interval property of reachable outputs") {
  // Every two-output game qualifies.
  CHECK(is_output_rough(game_from_weighted(3, {2, 1, 1})));
  CHECK(is_output_rough(GameTable(3, 2, 2, {1, 1, 2, 1, 2, 1, 1, 1})));
  // Fixing player 2 low in this table reaches {1, 3} but not 2.
  CHECK(!is_output_rough(GameTable(2, 2, 3, {1, 3, 2, 3})));
  // Fixing either single player here leaves a contiguous range.
  CHECK(is_output_rough(GameTable(2, 2, 3, {1, 2, 2, 3})));
}

TEST_CASE("fingerprints are stable and shape-sensitive") {
  const GameTable g = worked_example();
  CHECK(game_fingerprint(g) == "fnv1a64:c8b0ffc4cb313dd7");
  CHECK(game_fingerprint(g) == game_fingerprint(worked_example()));
  CHECK(game_fingerprint(g) !=
        game_fingerprint(game_from_weighted(3, {2, 1, 1})));
}
