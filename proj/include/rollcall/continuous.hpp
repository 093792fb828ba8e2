#pragma once

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "rollcall/game.hpp"
#include "rollcall/polynomial.hpp"
#include "rollcall/rational.hpp"
#include "rollcall/rollcall.hpp"

namespace rollcall {

// Continuous games live on the unit cube: v maps [0,1]^n into [0,1],
// v(0..0) = 0, v(1..1) = 1. The roll-call machinery carries over with
// level-1 completions replaced by substituting 0 and level-j completions by
// substituting 1; the uncertainty drop at a position is the shrink of the
// bracket [v with the rest at 0, v with the rest at 1].

// v(x) = sum_i weights[i] * links[i](x_i); weights nonnegative, summing to
// 1 exactly; links fix 0 -> 0, 1 -> 1 and are nondecreasing (checked on a
// sample grid). Empty links means the identity map for every player.
struct SeparableSum {
  std::vector<Rational> weights;
  std::vector<UnivariatePolynomial> links;
};

// v given by a polynomial with exact rational coefficients; must map the
// cube into [0,1] (checked at sampled grid points and all corners).
struct PolynomialGame {
  RationalPolynomial poly;
};

// v(x) = median of the coordinates; player count must be odd.
struct MedianGame {
  int players = 0;
};

// Arbitrary double-valued evaluator; range violations are counted as a
// Monte-Carlo diagnostic rather than rejected up front.
struct BlackBoxGame {
  int players = 0;
  std::function<double(const std::vector<double>&)> evaluate;
};

class ContinuousGame {
 public:
  ContinuousGame(SeparableSum g);      // validates, throws invalid_argument
  ContinuousGame(PolynomialGame g);    // validates range at sample points
  ContinuousGame(MedianGame g);        // validates odd player count
  ContinuousGame(BlackBoxGame g);

  int players() const;
  bool has_exact_evaluation() const;  // false only for BlackBoxGame
  double evaluate(const std::vector<double>& x) const;
  Rational evaluate_exact(const std::vector<Rational>& x) const;

  const std::variant<SeparableSum, PolynomialGame, MedianGame, BlackBoxGame>&
  form() const {
    return form_;
  }

 private:
  std::variant<SeparableSum, PolynomialGame, MedianGame, BlackBoxGame> form_;
};

// Optional per-player weighting densities for Monte-Carlo integrals. The
// integrand is multiplied by prod_i densities[i](x_i) with NO
// renormalization, so the weighted influences total the overall density
// mass rather than 1; divide by total_mass() for the normalized variant.
struct DensitySpec {
  std::vector<UnivariatePolynomial> densities;
  Rational total_mass() const;  // prod_i integral_0^1 densities[i]
};

struct ContinuousLimits {
  // Ceiling on n! * term-count work in the exact order sweep.
  std::uint64_t max_order_terms = 100'000'000;
};

// Separable sums resolve in closed form: phi equals the weight vector.
std::vector<Rational> phi_separable(const SeparableSum& game);

// The same game as one multivariate polynomial (links must be polynomial,
// which they are by construction here).
RationalPolynomial separable_to_polynomial(const SeparableSum& game);

// Exact influence of a polynomial game: for every call order, integrate the
// per-position brackets term by term over the cube and average. Exact
// rationals throughout.
std::vector<Rational> phi_polynomial_exact(const PolynomialGame& game,
                                           const ContinuousLimits& limits = {});

// Monte-Carlo influence of any continuous game: per sample draw x uniform
// on the cube (and a uniform call order), accumulate per-player brackets,
// optionally weighted by the density product. Deterministic in
// (seed, samples) independent of thread count, like phi_montecarlo.
McInfluence phi_continuous_mc(const ContinuousGame& game,
                              const std::optional<DensitySpec>& density,
                              std::uint64_t samples, std::uint64_t seed,
                              int threads = 1);

// Finite (j,j) snapshot: evaluate on the grid x = (level-1)/(j-1) and round
// the output to the nearest grid level (ties toward the lower level).
// Exact-rational evaluation and rounding whenever the game supports it.
// The caller must supply a monotone game; rounding preserves monotonicity,
// so the resulting table is checked and a violation throws domain_error.
GameTable discretize(const ContinuousGame& game, int levels,
                     std::size_t max_entries = kMaxTableEntries);

}  // namespace rollcall
