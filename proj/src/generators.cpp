#include "rollcall/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "rollcall/combinatorics.hpp"

namespace rollcall {

GameTable random_game(int n, int j, int k, Rng& rng) {
  const std::size_t size = checked_table_size(n, j, kMaxTableEntries);
  std::vector<int> values(size);
  for (auto& v : values) {
    v = 1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(k)));
  }
  return GameTable(n, j, k, std::move(values));
}

namespace {

// One monotone table draw: visit profiles by increasing coordinate sum (any
// linear extension of the dominance order works) and draw each value
// uniformly between the largest value of an immediate predecessor and k.
std::vector<int> draw_monotone_values(int n, int j, int k, std::size_t size,
                                      Rng& rng) {
  std::vector<std::size_t> order(size);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<int> sums(size);
  for (std::size_t idx = 0; idx < size; ++idx) {
    std::size_t rest = idx;
    int sum = 0;
    for (int i = 0; i < n; ++i) {
      sum += static_cast<int>(rest % static_cast<std::size_t>(j));
      rest /= static_cast<std::size_t>(j);
    }
    sums[idx] = sum;
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return sums[a] < sums[b]; });

  std::vector<int> values(size, 0);
  std::size_t step = 1;
  std::vector<std::size_t> steps(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    steps[i] = step;
    step *= static_cast<std::size_t>(j);
  }
  for (std::size_t idx : order) {
    int low = 1;
    std::size_t rest = idx;
    for (int i = 0; i < n; ++i) {
      const int digit = static_cast<int>(rest % static_cast<std::size_t>(j));
      rest /= static_cast<std::size_t>(j);
      if (digit > 0) low = std::max(low, values[idx - steps[i]]);
    }
    values[idx] =
        low + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(k - low + 1)));
  }
  // Pin the extremes so the draw always spans the full output range.
  values.front() = 1;
  values.back() = k;
  return values;
}

}  // namespace

GameTable random_monotonic_game(int n, int j, int k, Rng& rng,
                                const GameGenOptions& options) {
  const std::size_t size = checked_table_size(n, j, kMaxTableEntries);
  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    GameTable g(n, j, k, draw_monotone_values(n, j, k, size, rng));
    if (options.surjective && !is_surjective(g)) continue;
    if (options.output_rough && !is_output_rough(g)) continue;
    return g;
  }
  throw std::runtime_error(
      "random_monotonic_game: no draw met the requested options within " +
      std::to_string(options.max_attempts) + " attempts");
}

VoteDistribution random_iid_distribution(int j, Rng& rng) {
  if (j < 2) {
    throw std::invalid_argument("random_iid_distribution: need j >= 2");
  }
  // Small integer weights, at least one positive; exact masses w_l / sum(w).
  std::vector<BigInt> w(static_cast<std::size_t>(j));
  BigInt total(0);
  while (total == 0) {
    total = 0;
    for (auto& x : w) {
      x = static_cast<unsigned long>(rng.bounded(8));
      total += x;
    }
  }
  std::vector<Rational> p(static_cast<std::size_t>(j));
  for (int l = 0; l < j; ++l) p[l] = Rational(w[l]) / Rational(total);
  return VoteDistribution::iid_levels(std::move(p));
}

VoteDistribution random_anonymous_distribution(int n, Rng& rng) {
  if (n < 1) {
    throw std::invalid_argument("random_anonymous_distribution: need n >= 1");
  }
  // Per-profile masses depend only on the count h of high votes:
  // q_h = w_h / sum_h C(n,h) w_h with small positive integer weights, so
  // the total over all 2^n profiles is exactly 1.
  std::vector<BigInt> w(static_cast<std::size_t>(n) + 1);
  BigInt total(0);
  while (total == 0) {
    total = 0;
    for (int h = 0; h <= n; ++h) {
      w[h] = static_cast<unsigned long>(rng.bounded(8));
      total += binomial(static_cast<unsigned long>(n),
                        static_cast<unsigned long>(h)) *
               w[h];
    }
  }
  std::vector<Rational> q(static_cast<std::size_t>(n) + 1);
  for (int h = 0; h <= n; ++h) q[h] = Rational(w[h]) / Rational(total);
  return VoteDistribution::anonymous_by_count(std::move(q));
}

}  // namespace rollcall
