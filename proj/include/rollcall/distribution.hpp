#pragma once

#include <map>
#include <string>
#include <vector>

#include "rollcall/game.hpp"
#include "rollcall/rational.hpp"

namespace rollcall {

// A probability distribution over vote profiles. Four shapes:
//   Uniform          — every profile has mass j^-n.
//   IIDLevels        — players vote independently; level l has mass p[l-1].
//   AnonymousByCount — j = 2 only; a profile's mass q[h] depends only on how
//                      many players declare level 2 (h of them). Normalized
//                      as sum_h C(n,h) * q[h] == 1, i.e. q[h] is the mass of
//                      each individual profile, not of the count class.
//   Explicit         — a finite table profile -> mass; absent profiles have
//                      mass zero.
// All masses are exact rationals and validation is exact.
class VoteDistribution {
 public:
  enum class Kind { Uniform, IIDLevels, AnonymousByCount, Explicit };

  static VoteDistribution uniform();
  static VoteDistribution iid_levels(std::vector<Rational> p);
  static VoteDistribution anonymous_by_count(std::vector<Rational> q);
  static VoteDistribution explicit_table(std::map<VoteProfile, Rational> mass);

  Kind kind() const { return kind_; }

  // Exact validation against a game shape; throws std::invalid_argument
  // with the failing condition (sizes, negativity, normalization, or
  // AnonymousByCount with j != 2).
  void validate(int n, int j) const;

  // Exact mass of one profile (assumes validate(n, j) passed).
  Rational probability(const VoteProfile& a, int j) const;

  const std::vector<Rational>& level_masses() const { return p_; }
  const std::vector<Rational>& count_masses() const { return q_; }
  const std::map<VoteProfile, Rational>& table() const { return table_; }

  // Short human-readable label for reports ("uniform", "iid:1/3,1/3,1/3", ...).
  std::string describe() const;

 private:
  explicit VoteDistribution(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::vector<Rational> p_;                 // IIDLevels
  std::vector<Rational> q_;                 // AnonymousByCount
  std::map<VoteProfile, Rational> table_;   // Explicit
};

}  // namespace rollcall
