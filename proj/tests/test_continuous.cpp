#include "rollcall/continuous.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>

#include "doctest.h"
#include "rollcall/combinatorics.hpp"
#include "rollcall/errors.hpp"

using namespace rollcall;

namespace {

UnivariatePolynomial square_link() {
  // f(x) = x^2
  return UnivariatePolynomial({Rational(0), Rational(0), Rational(1)});
}

SeparableSum squares_example() {
  SeparableSum g;
  g.weights = {make_rational(1, 6), make_rational(1, 3), make_rational(1, 2)};
  g.links = {square_link(), square_link(), square_link()};
  return g;
}

PolynomialGame product_example() {
  // v(x) = x_1 * x_2^2 * x_3^3
  return PolynomialGame{RationalPolynomial::monomial(3, {1, 2, 3}, Rational(1))};
}

// Independent influence oracle: group call orders by the set of players
// who spoke before player i. With D(S) = integral over x_S of
// v(x_S, rest at 1) - v(x_S, rest at 0), player i collects
// sum_S |S|! (n-1-|S|)! / n! * (D(S) - D(S u {i})).
Rational bracket_integral(const RationalPolynomial& p, int n, unsigned mask) {
  RationalPolynomial hi = p;
  RationalPolynomial lo = p;
  for (int v = 1; v <= n; ++v) {
    if (!(mask & (1u << (v - 1)))) {
      hi = hi.substitute(v, Rational(1));
      lo = lo.substitute(v, Rational(0));
    }
  }
  return hi.integrate_unit_box() - lo.integrate_unit_box();
}

std::vector<Rational> phi_by_subset_grouping(const RationalPolynomial& p) {
  const int n = p.nvars();
  const Rational norm(factorial(static_cast<unsigned long>(n)));
  std::vector<Rational> phi(static_cast<std::size_t>(n), Rational(0));
  for (int i = 1; i <= n; ++i) {
    const unsigned ibit = 1u << (i - 1);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (mask & ibit) continue;
      const int s = __builtin_popcount(mask);
      const Rational weight =
          Rational(factorial(static_cast<unsigned long>(s)) *
                   factorial(static_cast<unsigned long>(n - 1 - s))) /
          norm;
      phi[i - 1] += weight * (bracket_integral(p, n, mask) -
                              bracket_integral(p, n, mask | ibit));
    }
  }
  return phi;
}

}  // namespace

TEST_CASE("univariate polynomial basics") {
  const UnivariatePolynomial sq = square_link();
  CHECK(sq.degree() == 2);
  CHECK(sq.evaluate(make_rational(1, 2)) == make_rational(1, 4));
  CHECK(sq.evaluate(0.5) == doctest::Approx(0.25));
  CHECK(sq.integral_unit() == make_rational(1, 3));
  CHECK(sq.nondecreasing_on_grid());
  CHECK(sq.nonnegative_on_grid());

  CHECK(UnivariatePolynomial::identity_map().integral_unit() ==
        make_rational(1, 2));

  // x(1 - x) rises then falls.
  const UnivariatePolynomial bump({Rational(0), Rational(1), Rational(-1)});
  CHECK(!bump.nondecreasing_on_grid());
  CHECK(bump.nonnegative_on_grid());
  const UnivariatePolynomial dip({Rational(0), Rational(-1)});
  CHECK(!dip.nonnegative_on_grid());
}

TEST_CASE("multivariate polynomial arithmetic and integration") {
  const RationalPolynomial x1 = RationalPolynomial::variable(3, 1);
  const RationalPolynomial x2 = RationalPolynomial::variable(3, 2);
  const RationalPolynomial x3 = RationalPolynomial::variable(3, 3);
  const RationalPolynomial prod = x1 * x2 * x2 * x3 * x3 * x3;
  CHECK(prod == product_example().poly);
  CHECK(prod.term_count() == 1);
  CHECK(prod.integrate_unit_box() == make_rational(1, 24));

  const RationalPolynomial sum = (x1 + x2) * make_rational(1, 2);
  CHECK(sum.evaluate({make_rational(1, 3), make_rational(2, 3),
                      Rational(0)}) == make_rational(1, 2));
  CHECK(sum.integrate_unit_box() == make_rational(1, 2));

  // Substitution zeroes the exponent without changing the variable count.
  const RationalPolynomial fixed = prod.substitute(2, make_rational(1, 2));
  CHECK(fixed.nvars() == 3);
  CHECK(fixed.evaluate({Rational(1), Rational(7), Rational(1)}) ==
        make_rational(1, 4));
  CHECK((prod - prod).term_count() == 0);
  CHECK((prod - prod).integrate_unit_box() == Rational(0));
}

TEST_CASE("separable games validate their pieces") {
  CHECK_NOTHROW(ContinuousGame(squares_example()));

  SeparableSum bad = squares_example();
  bad.weights[0] = make_rational(1, 5);  // no longer sums to 1
  CHECK_THROWS_AS(ContinuousGame(std::move(bad)), std::invalid_argument);

  SeparableSum negative = squares_example();
  negative.weights = {make_rational(3, 2), make_rational(-1, 2),
                      Rational(0)};
  CHECK_THROWS_AS(ContinuousGame(std::move(negative)), std::invalid_argument);

  SeparableSum doubled = squares_example();
  doubled.links[1] =
      UnivariatePolynomial({Rational(0), Rational(2)});  // f(1) = 2
  CHECK_THROWS_AS(ContinuousGame(std::move(doubled)), std::invalid_argument);

  // Empty links mean the identity for every player.
  SeparableSum plain;
  plain.weights = {make_rational(1, 4), make_rational(3, 4)};
  const ContinuousGame g{plain};
  CHECK(g.players() == 2);
  CHECK(g.evaluate_exact({make_rational(1, 2), Rational(1)}) ==
        make_rational(7, 8));
}

TEST_CASE("separable influence is the weight vector") {
  const SeparableSum g = squares_example();
  CHECK(phi_separable(g) ==
        std::vector<Rational>{make_rational(1, 6), make_rational(1, 3),
                              make_rational(1, 2)});

  // Cross-family agreement: the same game as one polynomial.
  const RationalPolynomial poly = separable_to_polynomial(g);
  const ContinuousGame direct{g};
  CHECK(poly.evaluate({make_rational(1, 2), make_rational(1, 3),
                       make_rational(1, 4)}) ==
        direct.evaluate_exact({make_rational(1, 2), make_rational(1, 3),
                               make_rational(1, 4)}));
  CHECK(phi_polynomial_exact(PolynomialGame{poly}) == phi_separable(g));
}

TEST_CASE("exact polynomial influence") {
  const auto phi = phi_polynomial_exact(product_example());
  REQUIRE(phi.size() == 3);
  CHECK(phi[0] == make_rational(35, 144));
  CHECK(phi[1] == make_rational(50, 144));
  CHECK(phi[2] == make_rational(59, 144));
  CHECK(phi[0] + phi[1] + phi[2] == Rational(1));

  // Independent oracle: subset grouping instead of order enumeration.
  CHECK(phi == phi_by_subset_grouping(product_example().poly));

  const RationalPolynomial pair =
      RationalPolynomial::variable(2, 1) * RationalPolynomial::variable(2, 2);
  const auto sym = phi_polynomial_exact(PolynomialGame{pair});
  CHECK(sym == std::vector<Rational>(2, make_rational(1, 2)));
  CHECK(sym == phi_by_subset_grouping(pair));

  const RationalPolynomial mixed =
      (RationalPolynomial::variable(3, 1) +
       RationalPolynomial::variable(3, 2) * RationalPolynomial::variable(3, 3) *
           Rational(2)) *
      make_rational(1, 3);
  CHECK(phi_polynomial_exact(PolynomialGame{mixed}) ==
        phi_by_subset_grouping(mixed));
}

TEST_CASE("exact polynomial influence guards its order sweep") {
  std::vector<unsigned> expo(12, 1);
  const PolynomialGame wide{
      RationalPolynomial::monomial(12, expo, Rational(1))};
  CHECK_THROWS_AS(phi_polynomial_exact(wide), enumeration_guard_error);
}

TEST_CASE("polynomial games validate their range") {
  CHECK_NOTHROW(ContinuousGame(product_example()));
  const RationalPolynomial big =
      RationalPolynomial::variable(2, 1) * Rational(2);
  CHECK_THROWS_AS(ContinuousGame(PolynomialGame{big}), std::invalid_argument);
  const RationalPolynomial shifted =
      RationalPolynomial::constant(2, make_rational(-1, 4)) +
      RationalPolynomial::variable(2, 1);
  CHECK_THROWS_AS(ContinuousGame(PolynomialGame{shifted}),
                  std::invalid_argument);
}

TEST_CASE("median games and black boxes") {
  const ContinuousGame med{MedianGame{3}};
  CHECK(med.players() == 3);
  CHECK(med.has_exact_evaluation());
  CHECK(med.evaluate({0.2, 0.8, 0.4}) == doctest::Approx(0.4));
  CHECK(med.evaluate_exact({Rational(0), Rational(1), make_rational(1, 3)}) ==
        make_rational(1, 3));
  CHECK_THROWS_AS(ContinuousGame(MedianGame{2}), std::invalid_argument);

  BlackBoxGame bb;
  bb.players = 2;
  bb.evaluate = [](const std::vector<double>& x) {
    return 0.75 * (x[0] + x[1]);  // tops out at 1.5: out of range
  };
  const ContinuousGame black{bb};
  CHECK(!black.has_exact_evaluation());
  CHECK(black.evaluate({1.0, 1.0}) == doctest::Approx(1.5));
  CHECK_THROWS_AS(black.evaluate_exact({Rational(1), Rational(1)}),
                  std::domain_error);
}

TEST_CASE("density specs multiply out their mass") {
  DensitySpec d;
  d.densities = {
      UnivariatePolynomial({make_rational(3, 4), Rational(0),
                            make_rational(-3, 4)}),
      UnivariatePolynomial({make_rational(3, 8), Rational(0),
                            make_rational(3, 8)}),
      UnivariatePolynomial({make_rational(3, 8), Rational(0),
                            make_rational(3, 8)}),
  };
  CHECK(d.total_mass() == make_rational(1, 8));
}

TEST_CASE("continuous Monte Carlo is deterministic and converges") {
  const ContinuousGame g{squares_example()};
  const auto one = phi_continuous_mc(g, std::nullopt, 100000, 11, 1);
  const auto four = phi_continuous_mc(g, std::nullopt, 100000, 11, 4);
  CHECK(std::memcmp(one.phi.data(), four.phi.data(),
                    one.phi.size() * sizeof(double)) == 0);
  CHECK(std::memcmp(one.std_error.data(), four.std_error.data(),
                    one.std_error.size() * sizeof(double)) == 0);
  CHECK(one.range_violations == 0);

  const auto weights = phi_separable(squares_example());
  for (int i = 0; i < 3; ++i) {
    const double target = weights[i].get_d();
    CHECK(std::abs(one.phi[i] - target) < 5 * one.std_error[i] + 1e-12);
  }

  // Exact polynomial value inside the Monte-Carlo error bars.
  const auto exact = phi_polynomial_exact(product_example());
  const auto mc = phi_continuous_mc(ContinuousGame{product_example()},
                                    std::nullopt, 100000, 12, 2);
  for (int i = 0; i < 3; ++i) {
    CHECK(std::abs(mc.phi[i] - exact[i].get_d()) < 5 * mc.std_error[i]);
  }
}

TEST_CASE("density-weighted median estimates") {
  DensitySpec d;
  d.densities = {
      UnivariatePolynomial({make_rational(3, 4), Rational(0),
                            make_rational(-3, 4)}),
      UnivariatePolynomial({make_rational(3, 8), Rational(0),
                            make_rational(3, 8)}),
      UnivariatePolynomial({make_rational(3, 8), Rational(0),
                            make_rational(3, 8)}),
  };
  const ContinuousGame med{MedianGame{3}};
  const auto mc = phi_continuous_mc(med, d, 200000, 5, 2);
  CHECK(mc.range_violations == 0);

  // Exact reference values for these densities, derived independently by
  // symbolic integration of the bracket regions.
  const double ref[3] = {551.0 / 13440.0, 1129.0 / 26880.0, 1129.0 / 26880.0};
  double total = 0;
  for (int i = 0; i < 3; ++i) {
    CHECK(std::abs(mc.phi[i] - ref[i]) < 5 * mc.std_error[i] + 1e-12);
    total += mc.phi[i];
  }
  // Raw (unnormalized) totals land on the density mass, not 1.
  CHECK(std::abs(total - 0.125) < 0.005);
}

TEST_CASE("black-box range violations are counted") {
  BlackBoxGame bb;
  bb.players = 2;
  bb.evaluate = [](const std::vector<double>& x) {
    return 0.75 * (x[0] + x[1]);
  };
  const auto mc = phi_continuous_mc(ContinuousGame{bb}, std::nullopt, 2000, 3);
  CHECK(mc.range_violations > 0);

  CHECK_THROWS_AS(
      phi_continuous_mc(ContinuousGame{bb}, std::nullopt, 0, 3),
      std::invalid_argument);
}

TEST_CASE("grid snapshots of continuous games") {
  // One player, v = x^2, three levels: grid {0, 1/2, 1} -> values
  // {0, 1/4, 1}; 1/4 sits exactly between levels and rounds down.
  SeparableSum solo;
  solo.weights = {Rational(1)};
  solo.links = {square_link()};
  const GameTable g3 = discretize(ContinuousGame{solo}, 3);
  CHECK(g3.n() == 1);
  CHECK(g3.j() == 3);
  CHECK(g3.values() == std::vector<int>{1, 1, 3});

  // Median of three on two levels is the majority game.
  const GameTable med2 = discretize(ContinuousGame{MedianGame{3}}, 2);
  CHECK(med2.values() == std::vector<int>{1, 1, 1, 2, 1, 2, 2, 2});
  CHECK(med2 == game_from_weighted(2, {1, 1, 1}));

  // The product polynomial on two levels is the unanimity game.
  const GameTable prod2 = discretize(ContinuousGame{product_example()}, 2);
  CHECK(prod2.value({2, 2, 2}) == 2);
  CHECK(prod2.value({2, 2, 1}) == 1);

  CHECK_THROWS_AS(discretize(ContinuousGame{solo}, 1), std::invalid_argument);
}
