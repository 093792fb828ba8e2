#pragma once

#include "rollcall/rational.hpp"

namespace rollcall {

// C(n, k); 0 outside the Pascal triangle (k < 0, k > n, or n < 0).
BigInt binomial(long n, long k);

BigInt factorial(unsigned long n);

// Sum_{l >= 0} C(s+l, s) * C(n-s-1-l, h-s-1), which telescopes to C(n, h).
// Requires 0 <= s <= h-1 and h <= n (throws std::domain_error otherwise).
// Returned value is the evaluated sum, so callers can assert the identity.
BigInt vandermonde_sum(long n, long h, long s);

// The two halves of the power split identity for 0 <= s <= n-1:
//   first  = sum_{y=0}^{n-s-1} C(n-1-y, n-s-1-y) * 2^y
//   second = sum_{y=0}^{s}     C(n-1-y, s-y)     * 2^y
// and first + second == 2^n.
struct SplitIdentity {
  BigInt first;
  BigInt second;
  BigInt total;  // first + second
};
SplitIdentity split_identity(long n, long s);

// Order/profile counts behind the split identity: with s of the other n-1
// players at the higher of two levels, the number of (call order, completion)
// pairs in which the distinguished player's declaration is the pivotal one,
// split by that declaration being high or low:
//   high_level = s! * (n-s-1)! * first(n, s)
//   low_level  = s! * (n-s-1)! * second(n, s)
// and high_level + low_level == 2^n * s! * (n-s-1)!.
struct UniformPivotCounts {
  BigInt high_level;
  BigInt low_level;
  BigInt total;
};
UniformPivotCounts direct_uniform_counts(long n, long s);

}  // namespace rollcall
