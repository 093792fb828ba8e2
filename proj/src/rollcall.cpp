#include "rollcall/rollcall.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <thread>

#include "rollcall/combinatorics.hpp"
#include "rollcall/errors.hpp"
#include "rollcall/rng.hpp"

namespace rollcall {

namespace {

void check_order_profile(const GameTable& g, const CallOrder& order,
                         const VoteProfile& a) {
  if (order.players() != g.n() || !order.valid()) {
    throw std::invalid_argument("call order must be a permutation of 1..n");
  }
  if (static_cast<int>(a.size()) != g.n()) {
    throw std::invalid_argument("profile length must equal n");
  }
  for (int lv : a) {
    if (lv < 1 || lv > g.j()) {
      throw std::invalid_argument("profile level outside 1..j");
    }
  }
}

}  // namespace

bool UncertaintySet::is_interval() const {
  if (outputs.empty()) return false;
  return outputs.back() - outputs.front() + 1 ==
         static_cast<int>(outputs.size());
}

UncertaintySet reachable_outputs(const GameTable& g, const CallOrder& order,
                                 const VoteProfile& a, int declared) {
  check_order_profile(g, order, a);
  if (declared < 0 || declared > g.n()) {
    throw std::invalid_argument("declared count outside 0..n");
  }
  const int n = g.n();
  const int j = g.j();
  std::vector<std::size_t> jstep(static_cast<std::size_t>(n));
  std::size_t s = 1;
  for (int i = 0; i < n; ++i) {
    jstep[i] = s;
    s *= static_cast<std::size_t>(j);
  }
  std::size_t base = 0;
  for (int t = 0; t < declared; ++t) {
    const int pl = order.seq[t];
    base += static_cast<std::size_t>(a[pl - 1] - 1) * jstep[pl - 1];
  }
  const int free_count = n - declared;
  std::vector<bool> seen(static_cast<std::size_t>(g.k()) + 1, false);
  std::vector<int> digit(static_cast<std::size_t>(free_count), 0);
  // walk all completions of the undeclared players
  while (true) {
    std::size_t idx = base;
    for (int f = 0; f < free_count; ++f) {
      const int pl = order.seq[declared + f];
      idx += static_cast<std::size_t>(digit[f]) * jstep[pl - 1];
    }
    seen[g.value_at(idx)] = true;
    int f = 0;
    for (; f < free_count; ++f) {
      if (digit[f] < j - 1) {
        ++digit[f];
        break;
      }
      digit[f] = 0;
    }
    if (f == free_count) break;
  }
  UncertaintySet out;
  for (int v = 1; v <= g.k(); ++v) {
    if (seen[v]) out.outputs.push_back(v);
  }
  return out;
}

int tau(const GameTable& g, const CallOrder& order, const VoteProfile& a,
        int position) {
  if (position < 1 || position > g.n()) {
    throw std::invalid_argument("position outside 1..n");
  }
  const auto before = reachable_outputs(g, order, a, position - 1);
  const auto after = reachable_outputs(g, order, a, position);
  return static_cast<int>(before.outputs.size()) -
         static_cast<int>(after.outputs.size());
}

int pivot_player(const GameTable& g, const CallOrder& order,
                 const VoteProfile& a) {
  if (g.k() != 2) {
    throw std::domain_error("pivot_player: game must have k == 2");
  }
  if (image_size(g) != 2) {
    throw std::domain_error(
        "pivot_player: outcome is settled before anyone speaks");
  }
  for (int pos = 1; pos <= g.n(); ++pos) {
    if (reachable_outputs(g, order, a, pos).outputs.size() == 1) {
      return order.seq[pos - 1];
    }
  }
  throw std::logic_error("no settling position found");
}

ThresholdBands threshold_bands(const GameTable& g, const CallOrder& order,
                               const VoteProfile& a) {
  ThresholdBands bands;
  bands.state.reserve(static_cast<std::size_t>(g.n()) + 1);
  for (int h = 0; h <= g.n(); ++h) {
    const auto reach = reachable_outputs(g, order, a, h);
    const int lo = reach.outputs.front();
    const int hi = reach.outputs.back();
    std::vector<int> row(static_cast<std::size_t>(g.k() - 1));
    for (int t = 1; t <= g.k() - 1; ++t) {
      row[t - 1] = hi <= t ? -1 : (lo >= t + 1 ? +1 : 0);
    }
    bands.state.push_back(std::move(row));
  }
  return bands;
}

std::vector<PivotEvent> pivot_events(const GameTable& g,
                                     const CallOrder& order,
                                     const VoteProfile& a) {
  const ThresholdBands bands = threshold_bands(g, order, a);
  std::vector<PivotEvent> events;
  for (int h = 1; h <= g.n(); ++h) {
    for (int t = 1; t <= g.k() - 1; ++t) {
      if (bands.state[h - 1][t - 1] == 0 && bands.state[h][t - 1] != 0) {
        events.push_back(PivotEvent{h, t, bands.state[h][t - 1]});
      }
    }
  }
  return events;
}

namespace {

// Shared enumeration guard: n! * j^n call-order/profile pairs.
void check_pair_budget(const GameTable& g, std::uint64_t max_pairs,
                       const char* op) {
  BigInt pairs = factorial(static_cast<unsigned long>(g.n()));
  for (int i = 0; i < g.n(); ++i) pairs *= g.j();
  if (pairs > BigInt(static_cast<unsigned long>(max_pairs))) {
    throw enumeration_guard_error(
        std::string(op) + ": n! * j^n = " + pairs.get_str() +
        " order/profile pairs exceeds the ceiling of " +
        std::to_string(max_pairs) + "; use phi_montecarlo instead");
  }
}

// One pass over all (order, profile) pairs tracking the
// (all-low, all-high) completion values; two table probes per declaration.
// Valid when the game is monotone and output-rough, where the reachable
// count equals highest - lowest + 1.
void interval_accumulate(const GameTable& g,
                         std::vector<unsigned long long>& counts) {
  const int n = g.n();
  const int j = g.j();
  std::vector<std::size_t> jstep(static_cast<std::size_t>(n));
  std::size_t s = 1;
  for (int i = 0; i < n; ++i) {
    jstep[i] = s;
    s *= static_cast<std::size_t>(j);
  }
  const std::size_t top = g.table_size() - 1;
  const int full_span = g.value_at(top) - g.value_at(0);

  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    VoteProfile a(static_cast<std::size_t>(n), 1);
    for (std::size_t pidx = 0; pidx < g.table_size(); ++pidx) {
      std::size_t up = top;
      std::size_t down = 0;
      int prev = full_span;
      for (int t = 0; t < n; ++t) {
        const int pl = perm[t];
        const std::size_t st = jstep[pl - 1];
        up -= static_cast<std::size_t>(j - a[pl - 1]) * st;
        down += static_cast<std::size_t>(a[pl - 1] - 1) * st;
        const int cur = g.value_at(up) - g.value_at(down);
        counts[pl - 1] += static_cast<unsigned>(prev - cur);
        prev = cur;
      }
      for (int i = 0; i < n; ++i) {
        if (a[i] < j) {
          ++a[i];
          break;
        }
        a[i] = 1;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

// Same sweep with exact reachable-set cardinalities; any game.
void general_accumulate(const GameTable& g, const ReachableSets& sets,
                        std::vector<unsigned long long>& counts) {
  const int n = g.n();
  const int j = g.j();
  const int im = sets.count(0);

  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    VoteProfile a(static_cast<std::size_t>(n), 1);
    for (std::size_t pidx = 0; pidx < g.table_size(); ++pidx) {
      std::size_t key = 0;
      int prev = im;
      for (int t = 0; t < n; ++t) {
        const int pl = perm[t];
        key += static_cast<std::size_t>(a[pl - 1]) * sets.key_step(pl);
        const int cur = sets.count(key);
        counts[pl - 1] += static_cast<unsigned>(prev - cur);
        prev = cur;
      }
      for (int i = 0; i < n; ++i) {
        if (a[i] < j) {
          ++a[i];
          break;
        }
        a[i] = 1;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

bool rough_within(const GameTable& g, std::size_t max_partial) {
  if (g.k() == 2) return true;
  return is_output_rough(g, max_partial);
}

// Interval check against an already-built table (avoids a second build).
bool all_intervals(const ReachableSets& sets, int n, int j) {
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<std::size_t>(j + 1);
  for (std::size_t key = 0; key < total; ++key) {
    if (!sets.is_interval_at(key)) return false;
  }
  return true;
}

}  // namespace

ExactInfluence phi_exact(const GameTable& g, ExactPath path,
                         const EnumLimits& limits) {
  const int n = g.n();
  ExactInfluence out;
  out.image_size = image_size(g);
  out.phi.assign(static_cast<std::size_t>(n), Rational(0));
  out.counts.assign(static_cast<std::size_t>(n), BigInt(0));
  out.denominator = 0;
  out.path_used = ExactPath::GeneralCounting;
  if (out.image_size < 2) {
    // constant game: nobody ever reduces uncertainty
    return out;
  }
  check_pair_budget(g, limits.max_pairs, "phi_exact");

  const bool monotone = is_monotonic(g);
  bool use_interval = false;
  std::optional<ReachableSets> sets;
  switch (path) {
    case ExactPath::Auto:
      if (monotone && g.k() == 2) {
        use_interval = true;
      } else {
        sets.emplace(g, limits.max_partial_entries);
        use_interval = monotone && all_intervals(*sets, n, g.j());
      }
      break;
    case ExactPath::IntervalTracking:
      if (!monotone || !rough_within(g, limits.max_partial_entries)) {
        throw std::domain_error(
            "interval tracking requires a monotone, output-rough game");
      }
      use_interval = true;
      break;
    case ExactPath::GeneralCounting:
      sets.emplace(g, limits.max_partial_entries);
      break;
  }

  std::vector<unsigned long long> counts(static_cast<std::size_t>(n), 0);
  if (use_interval) {
    interval_accumulate(g, counts);
    out.path_used = ExactPath::IntervalTracking;
  } else {
    general_accumulate(g, *sets, counts);
    out.path_used = ExactPath::GeneralCounting;
  }

  BigInt denom = factorial(static_cast<unsigned long>(n));
  for (int i = 0; i < n; ++i) denom *= g.j();
  denom *= out.image_size - 1;
  out.denominator = denom;
  for (int i = 0; i < n; ++i) {
    out.counts[i] = BigInt(static_cast<unsigned long>(counts[i]));
    out.phi[i] = make_rational(out.counts[i], denom);
  }
  return out;
}

std::vector<Rational> phi_weighted(const GameTable& g,
                                   const VoteDistribution& dist,
                                   const EnumLimits& limits) {
  const int n = g.n();
  const int j = g.j();
  dist.validate(n, j);
  const int im = image_size(g);
  std::vector<Rational> phi(static_cast<std::size_t>(n), Rational(0));
  if (im < 2) return phi;
  check_pair_budget(g, limits.max_pairs, "phi_weighted");

  const bool monotone = is_monotonic(g);
  bool use_interval = monotone && g.k() == 2;
  std::optional<ReachableSets> sets;
  if (!use_interval) {
    sets.emplace(g, limits.max_partial_entries);
    use_interval = monotone && all_intervals(*sets, n, j);
  }

  // Per-profile masses, computed once when the table is small enough to
  // store comfortably.
  const bool precompute = g.table_size() <= (std::size_t{1} << 20);
  std::vector<Rational> mass;
  if (precompute) {
    mass.reserve(g.table_size());
    VoteProfile a(static_cast<std::size_t>(n), 1);
    for (std::size_t idx = 0; idx < g.table_size(); ++idx) {
      mass.push_back(dist.probability(a, j));
      for (int i = 0; i < n; ++i) {
        if (a[i] < j) {
          ++a[i];
          break;
        }
        a[i] = 1;
      }
    }
  }

  std::vector<std::size_t> jstep(static_cast<std::size_t>(n));
  std::size_t s = 1;
  for (int i = 0; i < n; ++i) {
    jstep[i] = s;
    s *= static_cast<std::size_t>(j);
  }
  const std::size_t top = g.table_size() - 1;
  const int full_span = use_interval ? g.value_at(top) - g.value_at(0) : im;

  std::vector<Rational> acc(static_cast<std::size_t>(n), Rational(0));
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    VoteProfile a(static_cast<std::size_t>(n), 1);
    for (std::size_t pidx = 0; pidx < g.table_size(); ++pidx) {
      const Rational p = precompute ? mass[pidx] : dist.probability(a, j);
      if (sgn(p) != 0) {
        if (use_interval) {
          std::size_t up = top;
          std::size_t down = 0;
          int prev = full_span;
          for (int t = 0; t < n; ++t) {
            const int pl = perm[t];
            const std::size_t st = jstep[pl - 1];
            up -= static_cast<std::size_t>(j - a[pl - 1]) * st;
            down += static_cast<std::size_t>(a[pl - 1] - 1) * st;
            const int cur = g.value_at(up) - g.value_at(down);
            if (prev != cur) acc[pl - 1] += p * (prev - cur);
            prev = cur;
          }
        } else {
          std::size_t key = 0;
          int prev = im;
          for (int t = 0; t < n; ++t) {
            const int pl = perm[t];
            key += static_cast<std::size_t>(a[pl - 1]) * sets->key_step(pl);
            const int cur = sets->count(key);
            if (prev != cur) acc[pl - 1] += p * (prev - cur);
            prev = cur;
          }
        }
      }
      for (int i = 0; i < n; ++i) {
        if (a[i] < j) {
          ++a[i];
          break;
        }
        a[i] = 1;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  const Rational norm =
      Rational(factorial(static_cast<unsigned long>(n)) * (im - 1));
  for (int i = 0; i < n; ++i) {
    phi[i] = acc[i] / norm;
  }
  return phi;
}

namespace {

constexpr std::uint64_t kMcBlock = 65536;

struct McBlockResult {
  std::vector<double> sum;
  std::vector<double> sumsq;
};

}  // namespace

McInfluence phi_montecarlo(const GameTable& g, const VoteDistribution& dist,
                           std::uint64_t samples, std::uint64_t seed,
                           int threads) {
  const int n = g.n();
  const int j = g.j();
  dist.validate(n, j);
  if (threads < 1) {
    throw std::invalid_argument("threads must be at least 1");
  }
  McInfluence out;
  out.samples = samples;
  out.seed = seed;
  out.phi.assign(static_cast<std::size_t>(n), 0.0);
  out.std_error.assign(static_cast<std::size_t>(n), 0.0);
  const int im = image_size(g);
  if (im < 2 || samples == 0) return out;

  const bool monotone = is_monotonic(g);
  bool use_interval = monotone && g.k() == 2;
  std::shared_ptr<ReachableSets> sets;
  if (!use_interval) {
    sets = std::make_shared<ReachableSets>(g, kMaxPartialEntries);
    use_interval = monotone && all_intervals(*sets, n, j);
  }

  // Deterministic sampling tables (fixed summation order).
  std::vector<double> cumulative;  // IID levels / anonymous counts / explicit
  std::vector<const VoteProfile*> explicit_profiles;
  switch (dist.kind()) {
    case VoteDistribution::Kind::Uniform:
      break;
    case VoteDistribution::Kind::IIDLevels: {
      double c = 0;
      for (const auto& p : dist.level_masses()) {
        c += p.get_d();
        cumulative.push_back(c);
      }
      break;
    }
    case VoteDistribution::Kind::AnonymousByCount: {
      double c = 0;
      for (int h = 0; h <= n; ++h) {
        c += Rational(binomial(n, h) * dist.count_masses()[h]).get_d();
        cumulative.push_back(c);
      }
      break;
    }
    case VoteDistribution::Kind::Explicit: {
      double c = 0;
      for (const auto& [profile, p] : dist.table()) {
        c += p.get_d();
        cumulative.push_back(c);
        explicit_profiles.push_back(&profile);
      }
      break;
    }
  }

  const std::size_t top = g.table_size() - 1;
  const int full_span = use_interval ? g.value_at(top) - g.value_at(0) : im;
  std::vector<std::size_t> jstep(static_cast<std::size_t>(n));
  {
    std::size_t s = 1;
    for (int i = 0; i < n; ++i) {
      jstep[i] = s;
      s *= static_cast<std::size_t>(j);
    }
  }

  const std::uint64_t nblocks = (samples + kMcBlock - 1) / kMcBlock;
  std::vector<McBlockResult> blocks(static_cast<std::size_t>(nblocks));
  const Rng base(seed);

  auto run_block = [&](std::uint64_t b) {
    Rng rng = base.split(b);
    const std::uint64_t begin = b * kMcBlock;
    const std::uint64_t end = std::min(samples, begin + kMcBlock);
    McBlockResult res;
    res.sum.assign(static_cast<std::size_t>(n), 0.0);
    res.sumsq.assign(static_cast<std::size_t>(n), 0.0);
    VoteProfile a(static_cast<std::size_t>(n), 1);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::vector<double> x(static_cast<std::size_t>(n));
    const double scale = 1.0 / (im - 1);
    for (std::uint64_t s_i = begin; s_i < end; ++s_i) {
      // profile first, then order; the stream layout is part of the contract
      switch (dist.kind()) {
        case VoteDistribution::Kind::Uniform:
          for (int i = 0; i < n; ++i) {
            a[i] = 1 + static_cast<int>(rng.bounded(
                           static_cast<std::uint64_t>(j)));
          }
          break;
        case VoteDistribution::Kind::IIDLevels:
          for (int i = 0; i < n; ++i) {
            const double u = rng.next_double();
            int lv = j;
            for (int l = 0; l < j; ++l) {
              if (u < cumulative[l]) {
                lv = l + 1;
                break;
              }
            }
            a[i] = lv;
          }
          break;
        case VoteDistribution::Kind::AnonymousByCount: {
          const double u = rng.next_double();
          int h = n;
          for (int c = 0; c <= n; ++c) {
            if (u < cumulative[c]) {
              h = c;
              break;
            }
          }
          // uniform h-subset via partial Fisher-Yates over player slots
          std::iota(perm.begin(), perm.end(), 0);
          for (int i = 0; i < h; ++i) {
            const int pick = i + static_cast<int>(rng.bounded(
                                     static_cast<std::uint64_t>(n - i)));
            std::swap(perm[i], perm[pick]);
          }
          std::fill(a.begin(), a.end(), 1);
          for (int i = 0; i < h; ++i) a[perm[i]] = 2;
          break;
        }
        case VoteDistribution::Kind::Explicit: {
          const double u = rng.next_double();
          std::size_t pick = cumulative.size() - 1;
          for (std::size_t c = 0; c < cumulative.size(); ++c) {
            if (u < cumulative[c]) {
              pick = c;
              break;
            }
          }
          a = *explicit_profiles[pick];
          break;
        }
      }
      std::iota(perm.begin(), perm.end(), 1);
      rng.shuffle(perm);

      std::fill(x.begin(), x.end(), 0.0);
      if (use_interval) {
        std::size_t up = top;
        std::size_t down = 0;
        int prev = full_span;
        for (int t = 0; t < n; ++t) {
          const int pl = perm[t];
          const std::size_t st = jstep[pl - 1];
          up -= static_cast<std::size_t>(j - a[pl - 1]) * st;
          down += static_cast<std::size_t>(a[pl - 1] - 1) * st;
          const int cur = g.value_at(up) - g.value_at(down);
          if (prev != cur) x[pl - 1] = (prev - cur) * scale;
          prev = cur;
        }
      } else {
        std::size_t key = 0;
        int prev = im;
        for (int t = 0; t < n; ++t) {
          const int pl = perm[t];
          key += static_cast<std::size_t>(a[pl - 1]) * sets->key_step(pl);
          const int cur = sets->count(key);
          if (prev != cur) x[pl - 1] = (prev - cur) * scale;
          prev = cur;
        }
      }
      for (int i = 0; i < n; ++i) {
        res.sum[i] += x[i];
        res.sumsq[i] += x[i] * x[i];
      }
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

  // fixed merge order: block 0, 1, 2, ...
  std::vector<double> sum(static_cast<std::size_t>(n), 0.0);
  std::vector<double> sumsq(static_cast<std::size_t>(n), 0.0);
  for (std::uint64_t b = 0; b < nblocks; ++b) {
    for (int i = 0; i < n; ++i) {
      sum[i] += blocks[b].sum[i];
      sumsq[i] += blocks[b].sumsq[i];
    }
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

}  // namespace rollcall
