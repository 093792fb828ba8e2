#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rollcall/continuous.hpp"
#include "rollcall/distribution.hpp"
#include "rollcall/game.hpp"
#include "rollcall/rational.hpp"
#include "rollcall/rollcall.hpp"

namespace rollcall {

// Game documents are JSON with exactly one body form:
//   {"schema":1, "n":3, "j":2, "k":2, "values":[1,1,...]}        full table
//   {"schema":1, "n":3, "j":4, "min_winning":[[2,3,4]]}          k = 2
//   {"schema":1, "weighted":{"quota":3, "weights":[2,1,1]}}      j = k = 2
// Parsing validates schema, shape consistency, level ranges, and (for
// min_winning) the antichain condition; errors are std::invalid_argument
// naming the offending field.
struct GameDocument {
  enum class Body { Values, MinWinning, Weighted };

  int schema = 1;
  Body body = Body::Values;
  int n = 0;
  int j = 2;
  int k = 2;
  std::vector<int> values;
  std::vector<VoteProfile> min_winning;
  long long quota = 0;
  std::vector<long long> weights;

  GameTable expand(std::size_t max_entries = kMaxTableEntries) const;
};

GameDocument parse_game_document(const std::string& text);
GameTable parse_game(const std::string& text);

// Canonical serialization (full-values body); parse(serialize(g)) == g for
// every game, whatever body form g was first read from.
std::string serialize_game(const GameTable& g);

// Distribution specs as they appear on the command line:
//   "uniform" | "iid:1/2,1/4,1/4" | "anon:1/8,1/8,1/8,1/8"
// Masses are exact rationals. The explicit form lives in a file (see
// parse_explicit_distribution); this parser rejects "explicit:...".
VoteDistribution parse_distribution(const std::string& spec, int n, int j);

// {"schema":1, "profiles":[{"profile":[2,1], "mass":"1/3"}, ...]}
VoteDistribution parse_explicit_distribution(const std::string& text, int n,
                                             int j);

// Continuous-game documents:
//  {"family":"separable", "weights":["1/6","1/3","1/2"],
//   "links":[["0","1"], ...]}                      link coefficients ascending
//  {"family":"polynomial", "players":3,
//   "terms":[{"coeff":"1","exponents":[1,2,3]}]}
//  {"family":"median", "players":3,
//   "densities":[["3/4","0","-3/4"], ...]}         optional, any family
struct ContinuousDocument {
  std::string family;
  ContinuousGame game;
  std::optional<DensitySpec> density;
};
ContinuousDocument parse_continuous_document(const std::string& text);

// Influence reports: single JSON object with fixed key order; exact values
// carry lowest-terms fraction strings plus exact decimal renderings, floats
// print shortest-round-trip. Rendering the same inputs twice yields
// byte-identical text.
struct ResultReport {
  // subject: either a finite game...
  std::optional<GameTable> game;
  // ...or a continuous family.
  std::string family;
  int players = 0;

  std::string method;        // "exact" | "swings" | "montecarlo"
  std::string distribution;  // label; empty for continuous games

  std::vector<Rational> phi;       // exact methods
  std::vector<BigInt> counts;      // uniform-exact only
  BigInt denominator = 0;          // uniform-exact only
  std::optional<McInfluence> mc;   // Monte-Carlo methods

  // Density-weighted continuous runs: raw values above, normalized variant
  // (divided by the density mass) alongside.
  std::optional<std::vector<double>> phi_normalized;
  std::optional<Rational> density_mass;
};

std::string render_report(const ResultReport& report);

}  // namespace rollcall
