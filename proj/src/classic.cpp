#include "rollcall/classic.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "rollcall/combinatorics.hpp"
#include "rollcall/errors.hpp"

namespace rollcall {

namespace {

void require_two_levels(const GameTable& g, const char* what) {
  if (g.j() != 2) {
    throw std::domain_error(std::string(what) + ": game must have j == 2");
  }
}

void require_simple(const GameTable& g, const char* what) {
  if (g.j() != 2 || g.k() != 2) {
    throw std::domain_error(std::string(what) +
                            ": game must have j == 2 and k == 2");
  }
}

// With j == 2 the table index doubles as a coalition bitmask: bit i-1 set
// means player i votes the high level.
}  // namespace

std::vector<Rational> ssi_swings(const GameTable& g) {
  require_two_levels(g, "ssi_swings");
  const int n = g.n();
  const std::size_t full = g.table_size();
  std::vector<BigInt> weight(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    weight[s] = factorial(static_cast<unsigned long>(s)) *
                factorial(static_cast<unsigned long>(n - 1 - s));
  }
  const BigInt norm = factorial(static_cast<unsigned long>(n));
  std::vector<Rational> phi(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    BigInt acc(0);
    for (std::size_t mask = 0; mask < full; ++mask) {
      if (mask & bit) continue;
      const int diff = g.value_at(mask | bit) - g.value_at(mask);
      if (diff != 0) {
        acc += weight[static_cast<std::size_t>(std::popcount(mask))] * diff;
      }
    }
    phi[i] = make_rational(acc, norm);
  }
  return phi;
}

std::vector<std::vector<int>> swings(const GameTable& g, int player) {
  require_simple(g, "swings");
  if (player < 1 || player > g.n()) {
    throw std::invalid_argument("player index outside 1..n");
  }
  const std::size_t bit = std::size_t{1} << (player - 1);
  std::vector<std::vector<int>> out;
  for (std::size_t mask = 0; mask < g.table_size(); ++mask) {
    if (mask & bit) continue;
    if (g.value_at(mask | bit) == 2 && g.value_at(mask) == 1) {
      std::vector<int> members;
      for (int p = 0; p < g.n(); ++p) {
        if (mask & (std::size_t{1} << p)) members.push_back(p + 1);
      }
      out.push_back(std::move(members));
    }
  }
  return out;
}

namespace {

void check_order_budget(const GameTable& g, const char* op) {
  BigInt work = factorial(static_cast<unsigned long>(g.n()));
  for (int i = 0; i < g.n(); ++i) work *= 2;
  if (work > BigInt(1000000000UL)) {
    throw enumeration_guard_error(std::string(op) +
                                  ": n! * 2^n exceeds the ceiling");
  }
}

}  // namespace

std::vector<Rational> extreme_profile_average(const GameTable& g, int level) {
  require_two_levels(g, "extreme_profile_average");
  if (level != 1 && level != 2) {
    throw std::invalid_argument("extreme profile level must be 1 or 2");
  }
  check_order_budget(g, "extreme_profile_average");
  const int n = g.n();
  const std::size_t top = g.table_size() - 1;

  // Bracket walk on the all-`level` profile: fix one declared coordinate at
  // a time and difference the all-high/all-low completion values. Signed
  // accumulation, so non-monotone games are handled as written.
  std::vector<BigInt> acc(static_cast<std::size_t>(n), BigInt(0));
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    std::size_t up = top;
    std::size_t down = 0;
    int prev = g.value_at(top) - g.value_at(0);
    for (int t = 0; t < n; ++t) {
      const int pl = perm[t];
      const std::size_t st = std::size_t{1} << (pl - 1);
      if (level == 1) {
        up -= st;  // declared low: drop the high completion
      } else {
        down += st;  // declared high: raise the low completion
      }
      const int cur = g.value_at(up) - g.value_at(down);
      acc[pl - 1] += prev - cur;
      prev = cur;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  const BigInt norm = factorial(static_cast<unsigned long>(n));
  std::vector<Rational> phi(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) phi[i] = make_rational(acc[i], norm);
  return phi;
}

bool verify_extreme_profile_lemma(const GameTable& g) {
  require_simple(g, "verify_extreme_profile_lemma");
  if (!is_monotonic(g)) {
    throw std::domain_error("verify_extreme_profile_lemma: game must be monotone");
  }
  const auto reference = ssi_swings(g);
  return extreme_profile_average(g, 2) == reference &&
         extreme_profile_average(g, 1) == reference;
}

KeyLemmaSides key_lemma_sides(const GameTable& g, int player, int h) {
  require_simple(g, "key_lemma_sides");
  if (!is_monotonic(g)) {
    throw std::domain_error("key_lemma_sides: game must be monotone");
  }
  const int n = g.n();
  if (player < 1 || player > n) {
    throw std::invalid_argument("player index outside 1..n");
  }
  if (h < 0 || h > n) {
    throw std::invalid_argument("high-vote count outside 0..n");
  }
  check_order_budget(g, "key_lemma_sides");

  KeyLemmaSides sides{BigInt(0), BigInt(0)};

  // lhs: swings weighted by order counts, scaled by the number of profiles
  // in the count class.
  const std::size_t bit = std::size_t{1} << (player - 1);
  for (std::size_t mask = 0; mask < g.table_size(); ++mask) {
    if (mask & bit) continue;
    if (g.value_at(mask | bit) == 2 && g.value_at(mask) == 1) {
      const int s = std::popcount(mask);
      sides.lhs += factorial(static_cast<unsigned long>(s)) *
                   factorial(static_cast<unsigned long>(n - 1 - s));
    }
  }
  sides.lhs *= binomial(n, h);

  // rhs: direct count of (order, h-high-vote profile) pairs where the
  // player's declaration settles the outcome.
  const std::size_t top = g.table_size() - 1;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  unsigned long long hits = 0;
  do {
    for (std::size_t mask = 0; mask < g.table_size(); ++mask) {
      if (std::popcount(mask) != h) continue;
      std::size_t up = top;
      std::size_t down = 0;
      int prev = g.value_at(top) - g.value_at(0);
      for (int t = 0; t < n; ++t) {
        const int pl = perm[t];
        const std::size_t st = std::size_t{1} << (pl - 1);
        if (mask & st) {
          down += st;
        } else {
          up -= st;
        }
        const int cur = g.value_at(up) - g.value_at(down);
        if (pl == player && prev - cur == 1) ++hits;
        prev = cur;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  sides.rhs = BigInt(static_cast<unsigned long>(hits));
  return sides;
}

bool verify_key_lemma(const GameTable& g, int player, int h) {
  const KeyLemmaSides sides = key_lemma_sides(g, player, h);
  return sides.lhs == sides.rhs;
}

bool verify_key_lemma(const GameTable& g) {
  for (int player = 1; player <= g.n(); ++player) {
    for (int h = 0; h <= g.n(); ++h) {
      if (!verify_key_lemma(g, player, h)) return false;
    }
  }
  return true;
}

}  // namespace rollcall
