#include "rollcall/combinatorics.hpp"

#include <stdexcept>

namespace rollcall {

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) {
    return BigInt(0);
  }
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

BigInt factorial(unsigned long n) {
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

BigInt vandermonde_sum(long n, long h, long s) {
  if (n < 1 || h < 1 || h > n || s < 0 || s > h - 1) {
    throw std::domain_error(
        "vandermonde_sum: need 1 <= h <= n and 0 <= s <= h-1");
  }
  // l runs while both factors can be nonzero: C(s+l, s) is always live,
  // C(n-s-1-l, h-s-1) dies once n-s-1-l < h-s-1, i.e. l > n-h.
  BigInt total(0);
  for (long l = 0; l <= n - h; ++l) {
    total += binomial(s + l, s) * binomial(n - s - 1 - l, h - s - 1);
  }
  return total;
}

SplitIdentity split_identity(long n, long s) {
  if (n < 1 || s < 0 || s > n - 1) {
    throw std::domain_error("split_identity: need 0 <= s <= n-1");
  }
  BigInt two_pow(1);
  SplitIdentity out{BigInt(0), BigInt(0), BigInt(0)};
  // Shared running 2^y; both sums range over y with binomials guarding the
  // upper limits.
  for (long y = 0; y <= n - 1; ++y) {
    if (y <= n - s - 1) {
      out.first += binomial(n - 1 - y, n - s - 1 - y) * two_pow;
    }
    if (y <= s) {
      out.second += binomial(n - 1 - y, s - y) * two_pow;
    }
    two_pow *= 2;
  }
  out.total = out.first + out.second;
  return out;
}

UniformPivotCounts direct_uniform_counts(long n, long s) {
  const SplitIdentity split = split_identity(n, s);
  const BigInt orders = factorial(static_cast<unsigned long>(s)) *
                        factorial(static_cast<unsigned long>(n - s - 1));
  UniformPivotCounts out;
  out.high_level = orders * split.first;
  out.low_level = orders * split.second;
  out.total = out.high_level + out.low_level;
  return out;
}

}  // namespace rollcall
