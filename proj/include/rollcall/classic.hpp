#pragma once

#include <vector>

#include "rollcall/game.hpp"
#include "rollcall/rational.hpp"

namespace rollcall {

// The classic coalition-form swing index, evaluated literally:
//   phi~_i = (1/n!) * sum_{S subseteq N\{i}} |S|! (n-1-|S|)! (v(S u i) - v(S))
// where a coalition S is the profile voting level 2 exactly on S. Requires
// j == 2; no monotonicity gate, so on non-monotone games the signed
// differences can make entries negative and the total drift from 1.
std::vector<Rational> ssi_swings(const GameTable& g);

// i-swings of a (2,2) game: coalitions S (sorted member lists, i excluded)
// with v(S u {i}) = 2 and v(S) = 1.
std::vector<std::vector<int>> swings(const GameTable& g, int player);

// Average over call orders of player i's uncertainty drop when every player
// declares `level` (1 or j). For monotone (2,2) games both extremes
// reproduce ssi_swings exactly.
std::vector<Rational> extreme_profile_average(const GameTable& g, int level);
bool verify_extreme_profile_lemma(const GameTable& g);

// The counting identity linking swings to roll-call pivots in monotone
// (2,2) games: for player i and high-vote count h,
//   lhs = C(n,h) * sum_{i-swings S} |S|! (n-1-|S|)!
//   rhs = #{ (order, profile a) : a has h high votes and i's declaration
//            settles the outcome }
// and lhs == rhs.
struct KeyLemmaSides {
  BigInt lhs;
  BigInt rhs;
};
KeyLemmaSides key_lemma_sides(const GameTable& g, int player, int h);
bool verify_key_lemma(const GameTable& g, int player, int h);
bool verify_key_lemma(const GameTable& g);  // all players, all h in 0..n

}  // namespace rollcall
