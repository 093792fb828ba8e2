#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace rollcall {

// Default ceiling on full game tables (j^n entries).
inline constexpr std::size_t kMaxTableEntries = 10'000'000;
// Default ceiling on partial-assignment tables ((j+1)^n entries).
inline constexpr std::size_t kMaxPartialEntries = 30'000'000;

// A vote profile: entry i is player (i+1)'s declared level, each in 1..j.
// Players and levels are 1-based throughout; std::vector indexing is the
// only 0-based surface.
using VoteProfile = std::vector<int>;

// Flat-table index of a profile: sum_i (a_i - 1) * j^(i-1); player 1 is the
// least significant digit.
std::size_t profile_index(const VoteProfile& a, int j);
VoteProfile profile_from_index(std::size_t index, int n, int j);

// j^n with the table ceiling enforced; throws enumeration_guard_error rather
// than overflowing.
std::size_t checked_table_size(int n, int j,
                               std::size_t max_entries = kMaxTableEntries);

// A call order: seq[t] is the player called at position t+1. A permutation
// of 1..n.
struct CallOrder {
  std::vector<int> seq;

  static CallOrder identity(int n);
  int players() const { return static_cast<int>(seq.size()); }
  bool valid() const;
  // positions()[i-1] is player i's 1-based call position; the inverse
  // permutation of seq, and an involution on representations:
  // CallOrder{o.positions()}.positions() == o.seq.
  std::vector<int> positions() const;
};

// A finite ordered-voting game: v maps {1..j}^n -> {1..k}, stored as a flat
// table of j^n output levels. Immutable after construction.
class GameTable {
 public:
  GameTable(int n, int j, int k, std::vector<int> values,
            std::size_t max_entries = kMaxTableEntries);

  int n() const { return n_; }
  int j() const { return j_; }
  int k() const { return k_; }
  std::size_t table_size() const { return values_.size(); }

  int value_at(std::size_t index) const { return values_[index]; }
  int value(const VoteProfile& a) const;
  const std::vector<int>& values() const { return values_; }

  bool operator==(const GameTable& other) const = default;

 private:
  int n_;
  int j_;
  int k_;
  std::vector<int> values_;
};

// --- constructors ---

// Monotone (j,2) game from a set of minimal winning vectors: v(a) = 2 iff
// a >= m coordinate-wise for some m in the set. Vectors must form an
// antichain (throws std::invalid_argument on comparable pairs).
GameTable game_from_min_winning(int n, int j,
                                const std::vector<VoteProfile>& minimal,
                                std::size_t max_entries = kMaxTableEntries);

// Weighted majority game [quota; weights] as a (2,2) game: v(a) = 2 iff the
// total weight of players declaring level 2 meets the quota.
GameTable game_from_weighted(long long quota,
                             const std::vector<long long>& weights,
                             std::size_t max_entries = kMaxTableEntries);

GameTable constant_game(int n, int j, int k, int value);

// --- predicates and structure ---

bool is_monotonic(const GameTable& g);
int image_size(const GameTable& g);
bool is_surjective(const GameTable& g);

// True iff player i never affects the output: v is constant in coordinate i.
bool is_null_player(const GameTable& g, int player);

// True iff swapping the votes of players i and h never changes the output.
bool are_equivalent(const GameTable& g, int i, int h);

// Minimal winning vectors of a monotone (j,2) game (antichain of profiles
// with v = 2 whose lower neighbors all have v = 1), and dually the maximal
// losing vectors. Require k == 2 and monotonicity.
std::vector<VoteProfile> minimal_winning_vectors(const GameTable& g);
std::vector<VoteProfile> maximal_losing_vectors(const GameTable& g);

// Pointwise max / min of two games of identical shape.
GameTable join(const GameTable& u, const GameTable& w);
GameTable meet(const GameTable& u, const GameTable& w);

// Relabeled game (sigma v)(a_1..a_n) = v(a_{sigma(1)} .. a_{sigma(n)}).
// Slot i of v reads the vote of new-game player sigma(i), i.e. player
// sigma(i) takes over player i's old role, so influence transports as
// phi_{sigma(i)}(sigma v) = phi_i(v).
GameTable permute_game(const GameTable& g, const CallOrder& sigma);

// Same game with an extra last player whose vote is ignored.
GameTable add_null_player(const GameTable& g,
                          std::size_t max_entries = kMaxTableEntries);

// --- reachable outputs ---

// The set of outputs still possible once some coordinates are fixed:
// keys are mixed-radix numbers over (j+1) where digit i-1 is 0 when player
// i's vote is free and the declared level otherwise. Built bottom-up in one
// pass over all (j+1)^n partial assignments; each entry is a k-bit set.
class ReachableSets {
 public:
  explicit ReachableSets(const GameTable& g,
                         std::size_t max_entries = kMaxPartialEntries);

  // Key increment for fixing player i (1-based) to level t: t * key_step(i).
  std::size_t key_step(int player) const { return steps_[player - 1]; }

  int count(std::size_t key) const;            // |reachable outputs|
  bool is_interval_at(std::size_t key) const;  // contiguous levels?
  int lowest(std::size_t key) const;           // min reachable level (1-based)
  int highest(std::size_t key) const;

 private:
  int n_;
  int j_;
  int k_;
  int words_;  // 64-bit words per entry
  std::vector<std::size_t> steps_;
  std::vector<std::uint64_t> bits_;
  const std::uint64_t* entry(std::size_t key) const {
    return bits_.data() + key * static_cast<std::size_t>(words_);
  }
};

// True iff every partial assignment (each coordinate independently fixed or
// free, including all-free) reaches a contiguous interval of outputs. Every
// (j,2) game qualifies trivially. This is the structural condition under
// which uncertainty counting reduces to tracking a (lowest, highest) pair.
bool is_output_rough(const GameTable& g,
                     std::size_t max_entries = kMaxPartialEntries);

// FNV-1a 64 over the canonical byte rendering of (n, j, k, values); stable
// across runs and platforms. Hex string prefixed "fnv1a64:".
std::string game_fingerprint(const GameTable& g);

}  // namespace rollcall
