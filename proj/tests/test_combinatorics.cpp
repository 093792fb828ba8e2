#include "rollcall/combinatorics.hpp"

#include <stdexcept>

#include "doctest.h"
#include "rollcall/rational.hpp"

using namespace rollcall;

TEST_CASE("binomial basics and out-of-triangle zeros") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(10, 10) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(-2, 0) == 0);
  // Pascal recurrence on a band of the triangle.
  for (long n = 1; n <= 40; ++n) {
    for (long k = 0; k <= n; ++k) {
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
  }
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
}

TEST_CASE("telescoping binomial sum equals a single binomial") {
  // Small case by hand: n=4, h=2, s=1:
  // sum_l C(1+l,1) * C(2-l, 0) for l = 0..2 -> 1*1 + 2*1 + 3*1 = 6 = C(4,2).
  CHECK(vandermonde_sum(4, 2, 1) == 6);
  for (long n = 1; n <= 25; ++n) {
    for (long h = 1; h <= n; ++h) {
      for (long s = 0; s <= h - 1; ++s) {
        CHECK(vandermonde_sum(n, h, s) == binomial(n, h));
      }
    }
  }
  CHECK_THROWS_AS(vandermonde_sum(3, 0, 0), std::domain_error);
  CHECK_THROWS_AS(vandermonde_sum(3, 4, 0), std::domain_error);
  CHECK_THROWS_AS(vandermonde_sum(3, 2, 2), std::domain_error);
  CHECK_THROWS_AS(vandermonde_sum(3, 2, -1), std::domain_error);
}

TEST_CASE("power split identity and its closed forms") {
  // n=3, s=1: first = C(2,1)*1 + C(1,0)*2 = 4, second = C(2,1)*1 + C(1,0)*2
  // = 4; 4 + 4 = 8.
  const auto sides = split_identity(3, 1);
  CHECK(sides.first == 4);
  CHECK(sides.second == 4);
  CHECK(sides.total == 8);

  for (long n = 1; n <= 60; ++n) {
    const BigInt power = BigInt(1) << static_cast<unsigned>(n);
    for (long s = 0; s <= n - 1; ++s) {
      const auto sd = split_identity(n, s);
      CHECK(sd.total == power);
      CHECK(sd.first + sd.second == sd.total);
      if (s == 0) CHECK(sd.first == power - 1);
      if (s == 1) CHECK(sd.first == power - n - 1);
      if (s == 2) CHECK(sd.first == power - BigInt(n * n + n + 2) / 2);
    }
  }
  CHECK_THROWS_AS(split_identity(3, 3), std::domain_error);
  CHECK_THROWS_AS(split_identity(3, -1), std::domain_error);
}

TEST_CASE("pivot pair counts carry the order factor s!(n-s-1)!") {
  for (long n = 1; n <= 30; ++n) {
    const BigInt power = BigInt(1) << static_cast<unsigned>(n);
    for (long s = 0; s <= n - 1; ++s) {
      const auto counts = direct_uniform_counts(n, s);
      const auto sides = split_identity(n, s);
      const BigInt orders = factorial(static_cast<unsigned long>(s)) *
                            factorial(static_cast<unsigned long>(n - s - 1));
      CHECK(counts.high_level == orders * sides.first);
      CHECK(counts.low_level == orders * sides.second);
      CHECK(counts.total == orders * power);
    }
  }
}

TEST_CASE("rational parsing and rendering") {
  CHECK(parse_rational("3/4") == make_rational(3, 4));
  CHECK(parse_rational("-6/8") == make_rational(-3, 4));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(fraction_string(make_rational(10, 32)) == "5/16");
  CHECK(fraction_string(Rational(3)) == "3");
  CHECK(decimal_string(make_rational(5, 32)) == "0.15625");
  CHECK(decimal_string(Rational(0)) == "0");
  CHECK(decimal_string(make_rational(-1, 3), 6) == "-0.333333");
  CHECK(decimal_string(make_rational(2, 3), 6) == "0.666667");
  CHECK_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}
