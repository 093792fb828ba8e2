#include "rollcall/polynomial.hpp"

#include <stdexcept>

namespace rollcall {

UnivariatePolynomial::UnivariatePolynomial(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(Rational(0));
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
}

UnivariatePolynomial UnivariatePolynomial::identity_map() {
  return UnivariatePolynomial({Rational(0), Rational(1)});
}

Rational UnivariatePolynomial::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

double UnivariatePolynomial::evaluate(double x) const {
  double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + it->get_d();
  }
  return acc;
}

Rational UnivariatePolynomial::integral_unit() const {
  Rational total(0);
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    total += coeffs_[d] / Rational(static_cast<unsigned long>(d + 1));
  }
  return total;
}

bool UnivariatePolynomial::nondecreasing_on_grid(int grid_points) const {
  if (grid_points < 2) {
    throw std::invalid_argument("grid must have at least two points");
  }
  Rational prev = evaluate(Rational(0));
  for (int i = 1; i < grid_points; ++i) {
    const Rational x = make_rational(i, grid_points - 1);
    const Rational y = evaluate(x);
    if (y < prev) return false;
    prev = y;
  }
  return true;
}

bool UnivariatePolynomial::nonnegative_on_grid(int grid_points) const {
  if (grid_points < 2) {
    throw std::invalid_argument("grid must have at least two points");
  }
  for (int i = 0; i < grid_points; ++i) {
    const Rational x = make_rational(i, grid_points - 1);
    if (sgn(evaluate(x)) < 0) return false;
  }
  return true;
}

void RationalPolynomial::add_term(const std::vector<unsigned>& expo,
                                  const Rational& coeff) {
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = terms_.emplace(expo, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

RationalPolynomial RationalPolynomial::constant(int nvars, const Rational& c) {
  RationalPolynomial p(nvars);
  p.add_term(std::vector<unsigned>(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

RationalPolynomial RationalPolynomial::variable(int nvars, int var) {
  return monomial(nvars, [&] {
    std::vector<unsigned> e(static_cast<std::size_t>(nvars), 0);
    if (var < 1 || var > nvars) {
      throw std::invalid_argument("variable index outside 1..nvars");
    }
    e[var - 1] = 1;
    return e;
  }(), Rational(1));
}

RationalPolynomial RationalPolynomial::monomial(int nvars,
                                                std::vector<unsigned> expo,
                                                const Rational& coeff) {
  if (static_cast<int>(expo.size()) != nvars) {
    throw std::invalid_argument("exponent vector length must equal nvars");
  }
  RationalPolynomial p(nvars);
  p.add_term(expo, coeff);
  return p;
}

namespace {

void require_same_vars(const RationalPolynomial& a,
                       const RationalPolynomial& b) {
  if (a.nvars() != b.nvars()) {
    throw std::invalid_argument("polynomials have different variable counts");
  }
}

}  // namespace

RationalPolynomial RationalPolynomial::operator+(
    const RationalPolynomial& o) const {
  require_same_vars(*this, o);
  RationalPolynomial out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

RationalPolynomial RationalPolynomial::operator-(
    const RationalPolynomial& o) const {
  require_same_vars(*this, o);
  RationalPolynomial out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

RationalPolynomial RationalPolynomial::operator*(
    const RationalPolynomial& o) const {
  require_same_vars(*this, o);
  RationalPolynomial out(nvars_);
  std::vector<unsigned> e(static_cast<std::size_t>(nvars_));
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

RationalPolynomial RationalPolynomial::operator*(const Rational& c) const {
  RationalPolynomial out(nvars_);
  if (sgn(c) == 0) return out;
  for (const auto& [e, coeff] : terms_) out.add_term(e, coeff * c);
  return out;
}

namespace {

Rational rational_pow(const Rational& base, unsigned e) {
  Rational r(1);
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

double double_pow(double base, unsigned e) {
  double r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

RationalPolynomial RationalPolynomial::substitute(int var,
                                                  const Rational& value) const {
  if (var < 1 || var > nvars_) {
    throw std::invalid_argument("variable index outside 1..nvars");
  }
  RationalPolynomial out(nvars_);
  std::vector<unsigned> e;
  for (const auto& [expo, coeff] : terms_) {
    const unsigned d = expo[var - 1];
    e = expo;
    e[var - 1] = 0;
    out.add_term(e, d == 0 ? coeff : coeff * rational_pow(value, d));
  }
  return out;
}

Rational RationalPolynomial::evaluate(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != nvars_) {
    throw std::invalid_argument("point has wrong dimension");
  }
  Rational total(0);
  for (const auto& [expo, coeff] : terms_) {
    Rational term = coeff;
    for (int i = 0; i < nvars_; ++i) {
      if (expo[i] != 0) term *= rational_pow(x[i], expo[i]);
    }
    total += term;
  }
  return total;
}

double RationalPolynomial::evaluate(const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != nvars_) {
    throw std::invalid_argument("point has wrong dimension");
  }
  double total = 0;
  for (const auto& [expo, coeff] : terms_) {
    double term = coeff.get_d();
    for (int i = 0; i < nvars_; ++i) {
      if (expo[i] != 0) term *= double_pow(x[i], expo[i]);
    }
    total += term;
  }
  return total;
}

Rational RationalPolynomial::integrate_unit_box() const {
  Rational total(0);
  for (const auto& [expo, coeff] : terms_) {
    Rational term = coeff;
    for (int i = 0; i < nvars_; ++i) {
      term /= Rational(static_cast<unsigned long>(expo[i] + 1));
    }
    total += term;
  }
  return total;
}

}  // namespace rollcall
