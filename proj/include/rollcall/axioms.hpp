#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "rollcall/game.hpp"
#include "rollcall/rational.hpp"

namespace rollcall {

// Influence map under test; defaults to phi_exact's rationals.
using InfluenceMap = std::function<std::vector<Rational>(const GameTable&)>;

// Entries sum to 1 (games with at least two reachable outputs).
bool check_efficiency(const GameTable& g, const InfluenceMap& phi = {});

// Relabeling players permutes influence: phi_{sigma(i)}(sigma v) = phi_i(v).
bool check_anonymity(const GameTable& g, const CallOrder& sigma,
                     const InfluenceMap& phi = {});

// Appending an ignored player leaves existing influence unchanged and gives
// the new player zero.
bool check_null_player_extension(const GameTable& g,
                                 const InfluenceMap& phi = {});

// Membership in the class where the transfer identity is stated: monotone,
// surjective, output-rough, and with at least two outputs reachable.
bool transfer_admissible(const GameTable& g);
// Both games, their join and their meet are admissible.
bool transfer_pair_admissible(const GameTable& u, const GameTable& w);

// phi(u join w) + phi(u meet w) == phi(u) + phi(w), exactly, per player.
// Throws std::domain_error unless transfer_pair_admissible(u, w).
bool check_transfer(const GameTable& u, const GameTable& w,
                    const InfluenceMap& phi = {});

// Rebuilds phi of a monotone surjective (j,2) game purely from the transfer
// identity and unanimity building blocks: splitting the minimal winning
// vectors {m1..ml} as x = {m1..m(l-1)}, y = {ml},
//   phi(v) = phi(game(x)) + phi(game(y)) - phi(game(x) meet game(y))
// recursively, bottoming out at single-vector games evaluated directly.
// Node budget guards the 2^l expansion (enumeration_guard_error).
std::vector<Rational> recursive_phi_via_transfer(const GameTable& g,
                                                 std::size_t max_nodes = 65536);

}  // namespace rollcall
