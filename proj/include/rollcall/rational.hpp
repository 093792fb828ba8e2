#pragma once

#include <gmpxx.h>

#include <string>

namespace rollcall {

// All exact arithmetic runs on GMP rationals/integers. mpq_class keeps
// values canonical (lowest terms, positive denominator) through arithmetic;
// only direct num/den construction needs an explicit canonicalize().
using Rational = mpq_class;
using BigInt = mpz_class;

// num/den in lowest terms; throws std::invalid_argument on zero denominator.
Rational make_rational(const BigInt& num, const BigInt& den);
Rational make_rational(long num, long den);

// Parses "p" or "p/q" (optional sign, arbitrary precision). Decimal points
// are deliberately not accepted: probabilities and coefficients enter the
// tool as exact rationals.
Rational parse_rational(const std::string& text);

// Lowest-terms rendering: "p/q", or just "p" when the denominator is 1.
std::string fraction_string(const Rational& r);

// Correctly rounded fixed-point decimal (round half away from zero) with
// trailing zeros stripped. Computed by exact integer scaling, so the output
// is identical on every platform and round-trips the fraction at the printed
// precision.
std::string decimal_string(const Rational& r, int digits = 12);

}  // namespace rollcall
