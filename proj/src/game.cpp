#include "rollcall/game.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <stdexcept>

#include "rollcall/errors.hpp"

namespace rollcall {

std::size_t checked_table_size(int n, int j, std::size_t max_entries) {
  std::size_t size = 1;
  for (int i = 0; i < n; ++i) {
    if (size > max_entries / static_cast<std::size_t>(j)) {
      throw enumeration_guard_error(
          "game table would exceed " + std::to_string(max_entries) +
          " entries (j^n too large)");
    }
    size *= static_cast<std::size_t>(j);
  }
  return size;
}

namespace {

void check_profile(const VoteProfile& a, int n, int j) {
  if (static_cast<int>(a.size()) != n) {
    throw std::invalid_argument("profile has " + std::to_string(a.size()) +
                                " entries, expected " + std::to_string(n));
  }
  for (int lv : a) {
    if (lv < 1 || lv > j) {
      throw std::invalid_argument("profile level " + std::to_string(lv) +
                                  " outside 1.." + std::to_string(j));
    }
  }
}

}  // namespace

std::size_t profile_index(const VoteProfile& a, int j) {
  if (j < 2) {
    throw std::invalid_argument("profile_index: j must be at least 2");
  }
  check_profile(a, static_cast<int>(a.size()), j);
  std::size_t index = 0;
  std::size_t mult = 1;
  for (int lv : a) {
    index += static_cast<std::size_t>(lv - 1) * mult;
    mult *= static_cast<std::size_t>(j);
  }
  return index;
}

VoteProfile profile_from_index(std::size_t index, int n, int j) {
  VoteProfile a(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    a[i] = static_cast<int>(index % static_cast<std::size_t>(j)) + 1;
    index /= static_cast<std::size_t>(j);
  }
  if (index != 0) {
    throw std::invalid_argument("profile_from_index: index out of range");
  }
  return a;
}

CallOrder CallOrder::identity(int n) {
  CallOrder o;
  o.seq.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) o.seq[i] = i + 1;
  return o;
}

bool CallOrder::valid() const {
  const int n = players();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int p : seq) {
    if (p < 1 || p > n || seen[p - 1]) return false;
    seen[p - 1] = true;
  }
  return true;
}

std::vector<int> CallOrder::positions() const {
  if (!valid()) {
    throw std::invalid_argument("call order is not a permutation of 1..n");
  }
  std::vector<int> pos(seq.size());
  for (int t = 0; t < players(); ++t) {
    pos[seq[t] - 1] = t + 1;
  }
  return pos;
}

GameTable::GameTable(int n, int j, int k, std::vector<int> values,
                     std::size_t max_entries)
    : n_(n), j_(j), k_(k), values_(std::move(values)) {
  if (n < 1) throw std::invalid_argument("game: need at least one player");
  if (j < 2) throw std::invalid_argument("game: need at least two input levels");
  if (k < 2) throw std::invalid_argument("game: need at least two output levels");
  const std::size_t expect = checked_table_size(n, j, max_entries);
  if (values_.size() != expect) {
    throw std::invalid_argument("game: table has " +
                                std::to_string(values_.size()) +
                                " entries, expected j^n = " +
                                std::to_string(expect));
  }
  for (int v : values_) {
    if (v < 1 || v > k) {
      throw std::invalid_argument("game: output level " + std::to_string(v) +
                                  " outside 1.." + std::to_string(k));
    }
  }
}

int GameTable::value(const VoteProfile& a) const {
  check_profile(a, n_, j_);
  std::size_t index = 0;
  std::size_t mult = 1;
  for (int lv : a) {
    index += static_cast<std::size_t>(lv - 1) * mult;
    mult *= static_cast<std::size_t>(j_);
  }
  return values_[index];
}

namespace {

// True iff a >= b coordinate-wise.
bool dominates(const VoteProfile& a, const VoteProfile& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
  }
  return true;
}

}  // namespace

GameTable game_from_min_winning(int n, int j,
                                const std::vector<VoteProfile>& minimal,
                                std::size_t max_entries) {
  for (const auto& m : minimal) check_profile(m, n, j);
  for (std::size_t x = 0; x < minimal.size(); ++x) {
    for (std::size_t y = 0; y < minimal.size(); ++y) {
      if (x != y && dominates(minimal[x], minimal[y])) {
        throw std::invalid_argument(
            "min-winning vectors must form an antichain (two comparable "
            "vectors found)");
      }
    }
  }
  const std::size_t size = checked_table_size(n, j, max_entries);
  std::vector<int> values(size, 1);
  VoteProfile a(static_cast<std::size_t>(n), 1);
  for (std::size_t idx = 0; idx < size; ++idx) {
    for (const auto& m : minimal) {
      if (dominates(a, m)) {
        values[idx] = 2;
        break;
      }
    }
    // odometer step
    for (int i = 0; i < n; ++i) {
      if (a[i] < j) {
        ++a[i];
        break;
      }
      a[i] = 1;
    }
  }
  return GameTable(n, j, 2, std::move(values), max_entries);
}

GameTable game_from_weighted(long long quota,
                             const std::vector<long long>& weights,
                             std::size_t max_entries) {
  const int n = static_cast<int>(weights.size());
  if (n < 1) throw std::invalid_argument("weighted game: empty weight list");
  for (long long w : weights) {
    if (w < 0) throw std::invalid_argument("weighted game: negative weight");
  }
  const std::size_t size = checked_table_size(n, 2, max_entries);
  std::vector<int> values(size, 1);
  for (std::size_t idx = 0; idx < size; ++idx) {
    long long total = 0;
    for (int i = 0; i < n; ++i) {
      if (idx & (std::size_t{1} << i)) total += weights[i];
    }
    values[idx] = total >= quota ? 2 : 1;
  }
  return GameTable(n, 2, 2, std::move(values), max_entries);
}

GameTable constant_game(int n, int j, int k, int value) {
  if (value < 1 || value > k) {
    throw std::invalid_argument("constant game: value outside 1..k");
  }
  const std::size_t size = checked_table_size(n, j, kMaxTableEntries);
  return GameTable(n, j, k, std::vector<int>(size, value));
}

bool is_monotonic(const GameTable& g) {
  const int n = g.n();
  const int j = g.j();
  std::size_t step = 1;
  for (int i = 0; i < n; ++i) {
    // compare along player i+1's fiber: raising one level can't lower output
    for (std::size_t idx = 0; idx < g.table_size(); ++idx) {
      const int digit =
          static_cast<int>(idx / step % static_cast<std::size_t>(j));
      if (digit < j - 1 && g.value_at(idx) > g.value_at(idx + step)) {
        return false;
      }
    }
    step *= static_cast<std::size_t>(j);
  }
  return true;
}

int image_size(const GameTable& g) {
  std::vector<bool> seen(static_cast<std::size_t>(g.k()) + 1, false);
  int count = 0;
  for (std::size_t idx = 0; idx < g.table_size(); ++idx) {
    const int v = g.value_at(idx);
    if (!seen[v]) {
      seen[v] = true;
      ++count;
    }
  }
  return count;
}

bool is_surjective(const GameTable& g) {
  return image_size(g) == g.k();
}

bool is_null_player(const GameTable& g, int player) {
  if (player < 1 || player > g.n()) {
    throw std::invalid_argument("player index outside 1..n");
  }
  std::size_t step = 1;
  for (int i = 1; i < player; ++i) step *= static_cast<std::size_t>(g.j());
  const int j = g.j();
  for (std::size_t idx = 0; idx < g.table_size(); ++idx) {
    const int digit = static_cast<int>(idx / step % static_cast<std::size_t>(j));
    if (digit < j - 1 && g.value_at(idx) != g.value_at(idx + step)) {
      return false;
    }
  }
  return true;
}

bool are_equivalent(const GameTable& g, int i, int h) {
  if (i < 1 || i > g.n() || h < 1 || h > g.n()) {
    throw std::invalid_argument("player index outside 1..n");
  }
  if (i == h) return true;
  std::size_t step_i = 1;
  std::size_t step_h = 1;
  for (int t = 1; t < i; ++t) step_i *= static_cast<std::size_t>(g.j());
  for (int t = 1; t < h; ++t) step_h *= static_cast<std::size_t>(g.j());
  const std::size_t jj = static_cast<std::size_t>(g.j());
  for (std::size_t idx = 0; idx < g.table_size(); ++idx) {
    const auto di = static_cast<long long>(idx / step_i % jj);
    const auto dh = static_cast<long long>(idx / step_h % jj);
    const std::size_t swapped =
        idx + static_cast<std::size_t>((dh - di) * static_cast<long long>(step_i) +
                                       (di - dh) * static_cast<long long>(step_h));
    if (g.value_at(idx) != g.value_at(swapped)) return false;
  }
  return true;
}

namespace {

void require_monotone_two_output(const GameTable& g, const char* what) {
  if (g.k() != 2) {
    throw std::domain_error(std::string(what) + ": game must have k == 2");
  }
  if (!is_monotonic(g)) {
    throw std::domain_error(std::string(what) + ": game must be monotone");
  }
}

}  // namespace

std::vector<VoteProfile> minimal_winning_vectors(const GameTable& g) {
  require_monotone_two_output(g, "minimal_winning_vectors");
  std::vector<VoteProfile> out;
  std::size_t step[64];
  std::size_t s = 1;
  for (int i = 0; i < g.n(); ++i) {
    step[i] = s;
    s *= static_cast<std::size_t>(g.j());
  }
  for (std::size_t idx = 0; idx < g.table_size(); ++idx) {
    if (g.value_at(idx) != 2) continue;
    VoteProfile a = profile_from_index(idx, g.n(), g.j());
    bool minimal = true;
    for (int i = 0; i < g.n() && minimal; ++i) {
      if (a[i] > 1 && g.value_at(idx - step[i]) == 2) minimal = false;
    }
    if (minimal) out.push_back(std::move(a));
  }
  return out;
}

std::vector<VoteProfile> maximal_losing_vectors(const GameTable& g) {
  require_monotone_two_output(g, "maximal_losing_vectors");
  std::vector<VoteProfile> out;
  std::size_t step[64];
  std::size_t s = 1;
  for (int i = 0; i < g.n(); ++i) {
    step[i] = s;
    s *= static_cast<std::size_t>(g.j());
  }
  for (std::size_t idx = 0; idx < g.table_size(); ++idx) {
    if (g.value_at(idx) != 1) continue;
    VoteProfile a = profile_from_index(idx, g.n(), g.j());
    bool maximal = true;
    for (int i = 0; i < g.n() && maximal; ++i) {
      if (a[i] < g.j() && g.value_at(idx + step[i]) == 1) maximal = false;
    }
    if (maximal) out.push_back(std::move(a));
  }
  return out;
}

namespace {

void require_same_shape(const GameTable& u, const GameTable& w) {
  if (u.n() != w.n() || u.j() != w.j() || u.k() != w.k()) {
    throw std::invalid_argument("games must share shape (n, j, k)");
  }
}

}  // namespace

GameTable join(const GameTable& u, const GameTable& w) {
  require_same_shape(u, w);
  std::vector<int> values(u.table_size());
  for (std::size_t idx = 0; idx < values.size(); ++idx) {
    values[idx] = std::max(u.value_at(idx), w.value_at(idx));
  }
  return GameTable(u.n(), u.j(), u.k(), std::move(values));
}

GameTable meet(const GameTable& u, const GameTable& w) {
  require_same_shape(u, w);
  std::vector<int> values(u.table_size());
  for (std::size_t idx = 0; idx < values.size(); ++idx) {
    values[idx] = std::min(u.value_at(idx), w.value_at(idx));
  }
  return GameTable(u.n(), u.j(), u.k(), std::move(values));
}

GameTable permute_game(const GameTable& g, const CallOrder& sigma) {
  if (sigma.players() != g.n() || !sigma.valid()) {
    throw std::invalid_argument("permute_game: sigma must permute 1..n");
  }
  const int n = g.n();
  const int j = g.j();
  std::vector<int> values(g.table_size());
  VoteProfile a(static_cast<std::size_t>(n), 1);
  VoteProfile b(static_cast<std::size_t>(n), 1);
  for (std::size_t idx = 0; idx < values.size(); ++idx) {
    // (sigma v)(a) = v(a_{sigma(1)}, ..., a_{sigma(n)})
    for (int i = 0; i < n; ++i) b[i] = a[sigma.seq[i] - 1];
    values[idx] = g.value(b);
    for (int i = 0; i < n; ++i) {
      if (a[i] < j) {
        ++a[i];
        break;
      }
      a[i] = 1;
    }
  }
  return GameTable(n, j, g.k(), std::move(values));
}

GameTable add_null_player(const GameTable& g, std::size_t max_entries) {
  checked_table_size(g.n() + 1, g.j(), max_entries);
  std::vector<int> values;
  values.reserve(g.table_size() * static_cast<std::size_t>(g.j()));
  // new player is most significant: the old table repeats j times
  for (int copy = 0; copy < g.j(); ++copy) {
    values.insert(values.end(), g.values().begin(), g.values().end());
  }
  return GameTable(g.n() + 1, g.j(), g.k(), std::move(values), max_entries);
}

ReachableSets::ReachableSets(const GameTable& g, std::size_t max_entries)
    : n_(g.n()), j_(g.j()), k_(g.k()), words_((g.k() + 63) / 64) {
  // (j+1)^n keys, guarded
  std::size_t total = 1;
  for (int i = 0; i < n_; ++i) {
    if (total > max_entries / static_cast<std::size_t>(j_ + 1)) {
      throw enumeration_guard_error(
          "partial-assignment table would exceed " +
          std::to_string(max_entries) + " entries ((j+1)^n too large)");
    }
    total *= static_cast<std::size_t>(j_ + 1);
  }
  steps_.resize(static_cast<std::size_t>(n_));
  std::size_t s = 1;
  for (int i = 0; i < n_; ++i) {
    steps_[i] = s;
    s *= static_cast<std::size_t>(j_ + 1);
  }
  bits_.assign(total * static_cast<std::size_t>(words_), 0);

  // Filling a free digit strictly increases the key, so a reverse sweep has
  // every refinement ready when it's needed.
  std::vector<int> digits(static_cast<std::size_t>(n_));
  for (std::size_t key = total; key-- > 0;) {
    std::size_t rest = key;
    int first_free = -1;
    std::size_t table_index = 0;
    std::size_t mult = 1;
    for (int i = 0; i < n_; ++i) {
      digits[i] = static_cast<int>(rest % static_cast<std::size_t>(j_ + 1));
      rest /= static_cast<std::size_t>(j_ + 1);
      if (digits[i] == 0 && first_free < 0) first_free = i;
      if (digits[i] > 0) {
        table_index += static_cast<std::size_t>(digits[i] - 1) * mult;
      }
      mult *= static_cast<std::size_t>(j_);
    }
    std::uint64_t* dst = bits_.data() + key * static_cast<std::size_t>(words_);
    if (first_free < 0) {
      const int v = g.value_at(table_index);
      dst[(v - 1) / 64] |= std::uint64_t{1} << ((v - 1) % 64);
    } else {
      for (int t = 1; t <= j_; ++t) {
        const std::uint64_t* src =
            bits_.data() + (key + static_cast<std::size_t>(t) *
                                      steps_[first_free]) *
                               static_cast<std::size_t>(words_);
        for (int w = 0; w < words_; ++w) dst[w] |= src[w];
      }
    }
  }
}

int ReachableSets::count(std::size_t key) const {
  const std::uint64_t* e = entry(key);
  int total = 0;
  for (int w = 0; w < words_; ++w) total += std::popcount(e[w]);
  return total;
}

int ReachableSets::lowest(std::size_t key) const {
  const std::uint64_t* e = entry(key);
  for (int w = 0; w < words_; ++w) {
    if (e[w] != 0) return w * 64 + std::countr_zero(e[w]) + 1;
  }
  throw std::logic_error("reachable set is empty");
}

int ReachableSets::highest(std::size_t key) const {
  const std::uint64_t* e = entry(key);
  for (int w = words_; w-- > 0;) {
    if (e[w] != 0) return w * 64 + 63 - std::countl_zero(e[w]) + 1;
  }
  throw std::logic_error("reachable set is empty");
}

bool ReachableSets::is_interval_at(std::size_t key) const {
  return highest(key) - lowest(key) + 1 == count(key);
}

bool is_output_rough(const GameTable& g, std::size_t max_entries) {
  if (g.k() == 2) {
    // any nonempty subset of a two-point set is an interval
    return true;
  }
  ReachableSets sets(g, max_entries);
  std::size_t total = 1;
  for (int i = 0; i < g.n(); ++i) total *= static_cast<std::size_t>(g.j() + 1);
  for (std::size_t key = 0; key < total; ++key) {
    if (!sets.is_interval_at(key)) return false;
  }
  return true;
}

std::string game_fingerprint(const GameTable& g) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  auto feed = [&hash](const std::string& text) {
    for (char c : text) {
      hash ^= static_cast<unsigned char>(c);
      hash *= 0x100000001b3ULL;
    }
  };
  feed("g|" + std::to_string(g.n()) + "|" + std::to_string(g.j()) + "|" +
       std::to_string(g.k()) + "|");
  for (std::size_t idx = 0; idx < g.table_size(); ++idx) {
    feed(std::to_string(g.value_at(idx)));
    feed(",");
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(hash));
  return std::string("fnv1a64:") + buf;
}

}  // namespace rollcall
