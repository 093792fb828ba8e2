#pragma once

#include <map>
#include <string>
#include <vector>

#include "rollcall/rational.hpp"

namespace rollcall {

// Dense univariate polynomial, coefficients ascending by degree.
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() : coeffs_{Rational(0)} {}
  explicit UnivariatePolynomial(std::vector<Rational> coeffs);

  static UnivariatePolynomial identity_map();  // f(x) = x

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  Rational evaluate(const Rational& x) const;
  double evaluate(double x) const;
  Rational integral_unit() const;  // integral over [0,1]

  // Sampled structural checks on [0,1] (exact at grid points; grid_points
  // equally spaced including both endpoints).
  bool nondecreasing_on_grid(int grid_points = 129) const;
  bool nonnegative_on_grid(int grid_points = 129) const;

 private:
  std::vector<Rational> coeffs_;  // no trailing zeros except degree-0 zero
};

// Sparse multivariate polynomial over Q: exponent vector -> coefficient.
class RationalPolynomial {
 public:
  explicit RationalPolynomial(int nvars = 0) : nvars_(nvars) {}

  static RationalPolynomial constant(int nvars, const Rational& c);
  static RationalPolynomial variable(int nvars, int var);  // var is 1-based
  static RationalPolynomial monomial(int nvars, std::vector<unsigned> expo,
                                     const Rational& coeff);

  int nvars() const { return nvars_; }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<std::vector<unsigned>, Rational>& terms() const {
    return terms_;
  }

  RationalPolynomial operator+(const RationalPolynomial& o) const;
  RationalPolynomial operator-(const RationalPolynomial& o) const;
  RationalPolynomial operator*(const RationalPolynomial& o) const;
  RationalPolynomial operator*(const Rational& c) const;

  // Fix variable `var` (1-based) to a constant; the variable count is
  // unchanged, the exponent just drops to zero.
  RationalPolynomial substitute(int var, const Rational& value) const;

  Rational evaluate(const std::vector<Rational>& x) const;
  double evaluate(const std::vector<double>& x) const;

  // Integral over the unit box [0,1]^nvars:
  // sum_terms coeff * prod_i 1/(e_i + 1).
  Rational integrate_unit_box() const;

  bool operator==(const RationalPolynomial& o) const = default;

 private:
  void add_term(const std::vector<unsigned>& expo, const Rational& coeff);

  int nvars_;
  std::map<std::vector<unsigned>, Rational> terms_;  // no zero coefficients
};

}  // namespace rollcall
