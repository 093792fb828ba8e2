#include "rollcall/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace rollcall {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) {
    throw std::invalid_argument("rational: zero denominator");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(long num, long den) {
  return make_rational(BigInt(num), BigInt(den));
}

namespace {

std::string trimmed(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const std::string s = trimmed(text);
  if (s.empty()) {
    throw std::invalid_argument("rational: empty string");
  }
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
      return Rational(BigInt(s));
    }
    BigInt num(trimmed(s.substr(0, slash)));
    BigInt den(trimmed(s.substr(slash + 1)));
    return make_rational(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("rational: cannot parse '" + text +
                                "' (expected integer or p/q)");
  }
}

std::string fraction_string(const Rational& r) {
  return r.get_str();
}

std::string decimal_string(const Rational& r, int digits) {
  if (digits < 1) {
    throw std::invalid_argument("decimal_string: digits must be positive");
  }
  const bool negative = sgn(r) < 0;
  BigInt num = abs(r.get_num());
  const BigInt den = r.get_den();

  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));

  // round(num * scale / den), half away from zero
  BigInt scaled = num * scale * 2 + den;
  BigInt t;
  mpz_fdiv_q(t.get_mpz_t(), scaled.get_mpz_t(), BigInt(den * 2).get_mpz_t());

  BigInt whole = t / scale;
  BigInt frac = t % scale;

  std::string out = whole.get_str();
  std::string frac_str = frac.get_str();
  if (frac_str.size() < static_cast<std::size_t>(digits)) {
    frac_str.insert(0, static_cast<std::size_t>(digits) - frac_str.size(), '0');
  }
  while (!frac_str.empty() && frac_str.back() == '0') {
    frac_str.pop_back();
  }
  if (!frac_str.empty()) {
    out += "." + frac_str;
  }
  if (negative && (whole != 0 || !frac_str.empty())) {
    out.insert(0, "-");
  }
  return out;
}

}  // namespace rollcall
