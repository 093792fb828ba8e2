#include "rollcall/continuous.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "rollcall/combinatorics.hpp"
#include "rollcall/errors.hpp"
#include "rollcall/rng.hpp"

namespace rollcall {

namespace {

void validate_separable(const SeparableSum& g) {
  const std::size_t n = g.weights.size();
  if (n == 0) {
    throw std::invalid_argument("separable sum: need at least one player");
  }
  Rational total(0);
  for (const auto& w : g.weights) {
    if (sgn(w) < 0) {
      throw std::invalid_argument("separable sum: negative weight");
    }
    total += w;
  }
  if (total != 1) {
    throw std::invalid_argument("separable sum: weights sum to " +
                                fraction_string(total) + ", expected 1");
  }
  if (!g.links.empty()) {
    if (g.links.size() != n) {
      throw std::invalid_argument(
          "separable sum: need one link per player (or none at all)");
    }
    for (const auto& f : g.links) {
      if (f.evaluate(Rational(0)) != 0) {
        throw std::invalid_argument("separable sum: link must map 0 to 0");
      }
      if (f.evaluate(Rational(1)) != 1) {
        throw std::invalid_argument("separable sum: link must map 1 to 1");
      }
      if (!f.nondecreasing_on_grid()) {
        throw std::invalid_argument(
            "separable sum: link decreases between sample points");
      }
    }
  }
}

void validate_polynomial(const PolynomialGame& g) {
  const int n = g.poly.nvars();
  if (n < 1) {
    throw std::invalid_argument("polynomial game: need at least one variable");
  }
  // Range check at sampled points: the full {0, 1/4, 1/2, 3/4, 1}^n grid
  // while it stays small, corners always.
  const int grid = 5;
  double points = 1;
  for (int i = 0; i < n; ++i) points *= grid;
  const bool full_grid = points <= 100000.0;
  std::vector<int> digit(static_cast<std::size_t>(n), 0);
  std::vector<Rational> x(static_cast<std::size_t>(n));
  const int radix = full_grid ? grid : 2;
  while (true) {
    for (int i = 0; i < n; ++i) {
      x[i] = full_grid ? make_rational(digit[i], grid - 1)
                       : Rational(digit[i]);
    }
    const Rational y = g.poly.evaluate(x);
    if (sgn(y) < 0 || y > 1) {
      throw std::invalid_argument(
          "polynomial game: value outside [0,1] at a sampled grid point");
    }
    int i = 0;
    for (; i < n; ++i) {
      if (digit[i] < radix - 1) {
        ++digit[i];
        break;
      }
      digit[i] = 0;
    }
    if (i == n) break;
  }
}

}  // namespace

ContinuousGame::ContinuousGame(SeparableSum g) : form_(std::move(g)) {
  validate_separable(std::get<SeparableSum>(form_));
}

ContinuousGame::ContinuousGame(PolynomialGame g) : form_(std::move(g)) {
  validate_polynomial(std::get<PolynomialGame>(form_));
}

ContinuousGame::ContinuousGame(MedianGame g) : form_(g) {
  if (g.players < 1 || g.players % 2 == 0) {
    throw std::invalid_argument("median game: player count must be odd");
  }
}

ContinuousGame::ContinuousGame(BlackBoxGame g) : form_(std::move(g)) {
  const auto& b = std::get<BlackBoxGame>(form_);
  if (b.players < 1 || !b.evaluate) {
    throw std::invalid_argument("black-box game: need players and an evaluator");
  }
}

int ContinuousGame::players() const {
  return std::visit(
      [](const auto& g) -> int {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, SeparableSum>) {
          return static_cast<int>(g.weights.size());
        } else if constexpr (std::is_same_v<T, PolynomialGame>) {
          return g.poly.nvars();
        } else {
          return g.players;
        }
      },
      form_);
}

bool ContinuousGame::has_exact_evaluation() const {
  return !std::holds_alternative<BlackBoxGame>(form_);
}

double ContinuousGame::evaluate(const std::vector<double>& x) const {
  return std::visit(
      [&](const auto& g) -> double {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, SeparableSum>) {
          double total = 0;
          for (std::size_t i = 0; i < g.weights.size(); ++i) {
            const double fx =
                g.links.empty() ? x[i] : g.links[i].evaluate(x[i]);
            total += g.weights[i].get_d() * fx;
          }
          return total;
        } else if constexpr (std::is_same_v<T, PolynomialGame>) {
          return g.poly.evaluate(x);
        } else if constexpr (std::is_same_v<T, MedianGame>) {
          std::vector<double> copy = x;
          auto mid = copy.begin() + copy.size() / 2;
          std::nth_element(copy.begin(), mid, copy.end());
          return *mid;
        } else {
          return g.evaluate(x);
        }
      },
      form_);
}

Rational ContinuousGame::evaluate_exact(const std::vector<Rational>& x) const {
  return std::visit(
      [&](const auto& g) -> Rational {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, SeparableSum>) {
          Rational total(0);
          for (std::size_t i = 0; i < g.weights.size(); ++i) {
            const Rational fx =
                g.links.empty() ? x[i] : g.links[i].evaluate(x[i]);
            total += g.weights[i] * fx;
          }
          return total;
        } else if constexpr (std::is_same_v<T, PolynomialGame>) {
          return g.poly.evaluate(x);
        } else if constexpr (std::is_same_v<T, MedianGame>) {
          std::vector<Rational> copy = x;
          auto mid = copy.begin() + copy.size() / 2;
          std::nth_element(copy.begin(), mid, copy.end());
          return *mid;
        } else {
          throw std::domain_error(
              "black-box game has no exact evaluation");
        }
      },
      form_);
}

Rational DensitySpec::total_mass() const {
  Rational mass(1);
  for (const auto& f : densities) mass *= f.integral_unit();
  return mass;
}

std::vector<Rational> phi_separable(const SeparableSum& game) {
  validate_separable(game);
  // The bracket at player i's position integrates to exactly w_i: all other
  // players' contributions cancel between consecutive positions.
  return game.weights;
}

RationalPolynomial separable_to_polynomial(const SeparableSum& game) {
  validate_separable(game);
  const int n = static_cast<int>(game.weights.size());
  RationalPolynomial out(n);
  for (int i = 0; i < n; ++i) {
    const UnivariatePolynomial& f =
        game.links.empty() ? UnivariatePolynomial::identity_map()
                           : game.links[i];
    const auto& coeffs = f.coefficients();
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
      if (sgn(coeffs[d]) == 0) continue;
      std::vector<unsigned> expo(static_cast<std::size_t>(n), 0);
      expo[i] = static_cast<unsigned>(d);
      out = out + RationalPolynomial::monomial(n, std::move(expo),
                                               game.weights[i] * coeffs[d]);
    }
  }
  return out;
}

std::vector<Rational> phi_polynomial_exact(const PolynomialGame& game,
                                           const ContinuousLimits& limits) {
  validate_polynomial(game);
  const int n = game.poly.nvars();

  BigInt work = factorial(static_cast<unsigned long>(n)) *
                BigInt(static_cast<unsigned long>(game.poly.term_count()));
  if (work > BigInt(static_cast<unsigned long>(limits.max_order_terms))) {
    throw enumeration_guard_error(
        "phi_polynomial_exact: n! * term-count = " + work.get_str() +
        " exceeds the ceiling of " + std::to_string(limits.max_order_terms) +
        "; use phi_continuous_mc instead");
  }

  std::vector<Rational> acc(static_cast<std::size_t>(n), Rational(0));
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<Rational> span_integral(static_cast<std::size_t>(n) + 1);
  do {
    // span(h) = integral of (v with callers h+1..n at 1) - (same at 0);
    // walk h downward substituting one more caller on each side.
    RationalPolynomial up = game.poly;
    RationalPolynomial down = game.poly;
    span_integral[static_cast<std::size_t>(n)] = Rational(0);  // identical
    for (int h = n - 1; h >= 0; --h) {
      const int caller = perm[h];
      up = up.substitute(caller, Rational(1));
      down = down.substitute(caller, Rational(0));
      span_integral[h] =
          (up - down).integrate_unit_box();
    }
    for (int t = 0; t < n; ++t) {
      acc[perm[t] - 1] += span_integral[t] - span_integral[t + 1];
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  const Rational norm(factorial(static_cast<unsigned long>(n)));
  for (auto& v : acc) v /= norm;
  return acc;
}

namespace {

constexpr std::uint64_t kMcBlock = 65536;

struct BlockAcc {
  std::vector<double> sum;
  std::vector<double> sumsq;
  std::uint64_t violations = 0;
};

}  // namespace

McInfluence phi_continuous_mc(const ContinuousGame& game,
                              const std::optional<DensitySpec>& density,
                              std::uint64_t samples, std::uint64_t seed,
                              int threads) {
  const int n = game.players();
  if (samples < 1) {
    throw std::invalid_argument("phi_continuous_mc: need at least one sample");
  }
  if (threads < 1) {
    throw std::invalid_argument("threads must be at least 1");
  }
  if (density) {
    if (static_cast<int>(density->densities.size()) != n) {
      throw std::invalid_argument("density spec: need one density per player");
    }
    for (const auto& f : density->densities) {
      if (!f.nonnegative_on_grid()) {
        throw std::invalid_argument(
            "density spec: density negative at a sample point");
      }
    }
  }

  McInfluence out;
  out.samples = samples;
  out.seed = seed;
  out.phi.assign(static_cast<std::size_t>(n), 0.0);
  out.std_error.assign(static_cast<std::size_t>(n), 0.0);

  const std::uint64_t nblocks = (samples + kMcBlock - 1) / kMcBlock;
  std::vector<BlockAcc> blocks(static_cast<std::size_t>(nblocks));
  const Rng base(seed);

  auto run_block = [&](std::uint64_t b) {
    Rng rng = base.split(b);
    const std::uint64_t begin = b * kMcBlock;
    const std::uint64_t end = std::min(samples, begin + kMcBlock);
    BlockAcc res;
    res.sum.assign(static_cast<std::size_t>(n), 0.0);
    res.sumsq.assign(static_cast<std::size_t>(n), 0.0);
    std::vector<double> x(static_cast<std::size_t>(n));
    std::vector<double> up(static_cast<std::size_t>(n));
    std::vector<double> down(static_cast<std::size_t>(n));
    std::vector<double> span(static_cast<std::size_t>(n) + 1);
    std::vector<double> contrib(static_cast<std::size_t>(n));
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (std::uint64_t s_i = begin; s_i < end; ++s_i) {
      // point first, then order (fixed stream layout)
      for (int i = 0; i < n; ++i) x[i] = rng.next_double();
      std::iota(perm.begin(), perm.end(), 1);
      rng.shuffle(perm);

      bool violated = false;
      std::copy(x.begin(), x.end(), up.begin());
      std::copy(x.begin(), x.end(), down.begin());
      // span(n) with everyone declared is v(x) - v(x) = 0
      span[static_cast<std::size_t>(n)] = 0.0;
      for (int h = n - 1; h >= 0; --h) {
        const int caller = perm[h];
        up[caller - 1] = 1.0;
        down[caller - 1] = 0.0;
        const double vu = game.evaluate(up);
        const double vd = game.evaluate(down);
        if (vu < -1e-9 || vu > 1 + 1e-9 || vd < -1e-9 || vd > 1 + 1e-9) {
          violated = true;
        }
        span[h] = vu - vd;
      }
      double weight = 1.0;
      if (density) {
        for (int i = 0; i < n; ++i) {
          weight *= density->densities[i].evaluate(x[i]);
        }
      }
      for (int t = 0; t < n; ++t) {
        contrib[perm[t] - 1] = (span[t] - span[t + 1]) * weight;
      }
      for (int i = 0; i < n; ++i) {
        res.sum[i] += contrib[i];
        res.sumsq[i] += contrib[i] * contrib[i];
      }
      if (violated) ++res.violations;
    }
    blocks[b] = std::move(res);
  };

  if (threads == 1 || nblocks == 1) {
    for (std::uint64_t b = 0; b < nblocks; ++b) run_block(b);
  } else {
    const int workers = static_cast<int>(
        std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), nblocks));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w]() {
        for (std::uint64_t b = static_cast<std::uint64_t>(w); b < nblocks;
             b += static_cast<std::uint64_t>(workers)) {
          run_block(b);
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  std::vector<double> sum(static_cast<std::size_t>(n), 0.0);
  std::vector<double> sumsq(static_cast<std::size_t>(n), 0.0);
  for (std::uint64_t b = 0; b < nblocks; ++b) {
    for (int i = 0; i < n; ++i) {
      sum[i] += blocks[b].sum[i];
      sumsq[i] += blocks[b].sumsq[i];
    }
    out.range_violations += blocks[b].violations;
  }
  const double ns = static_cast<double>(samples);
  for (int i = 0; i < n; ++i) {
    const double mean = sum[i] / ns;
    out.phi[i] = mean;
    if (samples > 1) {
      double var = (sumsq[i] - ns * mean * mean) / (ns - 1);
      if (var < 0) var = 0;
      out.std_error[i] = std::sqrt(var / ns);
    }
  }
  return out;
}

GameTable discretize(const ContinuousGame& game, int levels,
                     std::size_t max_entries) {
  if (levels < 2) {
    throw std::invalid_argument("discretize: need at least two levels");
  }
  const int n = game.players();
  const int j = levels;
  std::size_t size = 1;
  for (int i = 0; i < n; ++i) {
    if (size > max_entries / static_cast<std::size_t>(j)) {
      throw enumeration_guard_error(
          "discretize: table would exceed " + std::to_string(max_entries) +
          " entries (j^n too large)");
    }
    size *= static_cast<std::size_t>(j);
  }

  // Round y in [0,1] to the nearest of the j grid levels, ties toward the
  // lower level: m = ceil(y*(j-1) - 1/2), clamped to 0..j-1.
  const auto round_exact = [&](const Rational& y) {
    const Rational u = y * (j - 1);
    BigInt num = 2 * u.get_num() - u.get_den();
    BigInt den = 2 * u.get_den();
    BigInt m;
    mpz_cdiv_q(m.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (m < 0) m = 0;
    if (m > j - 1) m = j - 1;
    return static_cast<int>(m.get_si()) + 1;
  };
  const auto round_double = [&](double y) {
    const double u = y * (j - 1);
    long m = static_cast<long>(std::ceil(u - 0.5));
    if (m < 0) m = 0;
    if (m > j - 1) m = j - 1;
    return static_cast<int>(m) + 1;
  };

  std::vector<int> values(size);
  std::vector<int> digit(static_cast<std::size_t>(n), 0);
  if (game.has_exact_evaluation()) {
    std::vector<Rational> grid(static_cast<std::size_t>(j));
    for (int l = 0; l < j; ++l) grid[l] = make_rational(l, j - 1);
    std::vector<Rational> x(static_cast<std::size_t>(n));
    for (std::size_t idx = 0; idx < size; ++idx) {
      for (int i = 0; i < n; ++i) x[i] = grid[digit[i]];
      values[idx] = round_exact(game.evaluate_exact(x));
      for (int i = 0; i < n; ++i) {
        if (digit[i] < j - 1) {
          ++digit[i];
          break;
        }
        digit[i] = 0;
      }
    }
  } else {
    std::vector<double> x(static_cast<std::size_t>(n));
    for (std::size_t idx = 0; idx < size; ++idx) {
      for (int i = 0; i < n; ++i) {
        x[i] = static_cast<double>(digit[i]) / (j - 1);
      }
      values[idx] = round_double(game.evaluate(x));
      for (int i = 0; i < n; ++i) {
        if (digit[i] < j - 1) {
          ++digit[i];
          break;
        }
        digit[i] = 0;
      }
    }
  }

  GameTable table(n, j, j, std::move(values), max_entries);
  if (!is_monotonic(table)) {
    throw std::domain_error(
        "discretize: the sampled game is not monotone on the grid");
  }
  return table;
}

}  // namespace rollcall
