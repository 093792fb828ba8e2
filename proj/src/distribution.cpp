#include "rollcall/distribution.hpp"

#include <stdexcept>

#include "rollcall/combinatorics.hpp"

namespace rollcall {

VoteDistribution VoteDistribution::uniform() {
  return VoteDistribution(Kind::Uniform);
}

VoteDistribution VoteDistribution::iid_levels(std::vector<Rational> p) {
  VoteDistribution d(Kind::IIDLevels);
  d.p_ = std::move(p);
  return d;
}

VoteDistribution VoteDistribution::anonymous_by_count(std::vector<Rational> q) {
  VoteDistribution d(Kind::AnonymousByCount);
  d.q_ = std::move(q);
  return d;
}

VoteDistribution VoteDistribution::explicit_table(
    std::map<VoteProfile, Rational> mass) {
  VoteDistribution d(Kind::Explicit);
  d.table_ = std::move(mass);
  return d;
}

void VoteDistribution::validate(int n, int j) const {
  switch (kind_) {
    case Kind::Uniform:
      return;
    case Kind::IIDLevels: {
      if (static_cast<int>(p_.size()) != j) {
        throw std::invalid_argument(
            "iid distribution: need exactly j = " + std::to_string(j) +
            " level masses, got " + std::to_string(p_.size()));
      }
      Rational total(0);
      for (const auto& mass : p_) {
        if (sgn(mass) < 0) {
          throw std::invalid_argument("iid distribution: negative mass");
        }
        total += mass;
      }
      if (total != 1) {
        throw std::invalid_argument(
            "iid distribution: level masses sum to " +
            fraction_string(total) + ", expected 1");
      }
      return;
    }
    case Kind::AnonymousByCount: {
      if (j != 2) {
        throw std::invalid_argument(
            "anonymous-by-count distribution requires j == 2");
      }
      if (static_cast<int>(q_.size()) != n + 1) {
        throw std::invalid_argument(
            "anonymous distribution: need n+1 = " + std::to_string(n + 1) +
            " masses (one per high-vote count), got " +
            std::to_string(q_.size()));
      }
      Rational total(0);
      for (int h = 0; h <= n; ++h) {
        if (sgn(q_[h]) < 0) {
          throw std::invalid_argument("anonymous distribution: negative mass");
        }
        total += Rational(binomial(n, h)) * q_[h];
      }
      if (total != 1) {
        throw std::invalid_argument(
            "anonymous distribution: sum_h C(n,h) q_h = " +
            fraction_string(total) + ", expected 1");
      }
      return;
    }
    case Kind::Explicit: {
      Rational total(0);
      for (const auto& [profile, mass] : table_) {
        if (static_cast<int>(profile.size()) != n) {
          throw std::invalid_argument(
              "explicit distribution: profile of length " +
              std::to_string(profile.size()) + ", expected " +
              std::to_string(n));
        }
        for (int lv : profile) {
          if (lv < 1 || lv > j) {
            throw std::invalid_argument(
                "explicit distribution: level outside 1.." + std::to_string(j));
          }
        }
        if (sgn(mass) < 0) {
          throw std::invalid_argument("explicit distribution: negative mass");
        }
        total += mass;
      }
      if (total != 1) {
        throw std::invalid_argument("explicit distribution: masses sum to " +
                                    fraction_string(total) + ", expected 1");
      }
      return;
    }
  }
  throw std::logic_error("unreachable distribution kind");
}

Rational VoteDistribution::probability(const VoteProfile& a, int j) const {
  switch (kind_) {
    case Kind::Uniform: {
      Rational denom(1);
      for (std::size_t i = 0; i < a.size(); ++i) denom *= j;
      return Rational(1) / denom;
    }
    case Kind::IIDLevels: {
      Rational prob(1);
      for (int lv : a) prob *= p_[lv - 1];
      return prob;
    }
    case Kind::AnonymousByCount: {
      int high = 0;
      for (int lv : a) {
        if (lv == 2) ++high;
      }
      return q_[high];
    }
    case Kind::Explicit: {
      auto it = table_.find(a);
      return it == table_.end() ? Rational(0) : it->second;
    }
  }
  throw std::logic_error("unreachable distribution kind");
}

std::string VoteDistribution::describe() const {
  switch (kind_) {
    case Kind::Uniform:
      return "uniform";
    case Kind::IIDLevels: {
      std::string out = "iid:";
      for (std::size_t i = 0; i < p_.size(); ++i) {
        if (i > 0) out += ",";
        out += fraction_string(p_[i]);
      }
      return out;
    }
    case Kind::AnonymousByCount: {
      std::string out = "anon:";
      for (std::size_t i = 0; i < q_.size(); ++i) {
        if (i > 0) out += ",";
        out += fraction_string(q_[i]);
      }
      return out;
    }
    case Kind::Explicit:
      return "explicit[" + std::to_string(table_.size()) + " profiles]";
  }
  throw std::logic_error("unreachable distribution kind");
}

}  // namespace rollcall
