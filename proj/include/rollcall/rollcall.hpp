#pragma once

#include <cstdint>
#include <vector>

#include "rollcall/distribution.hpp"
#include "rollcall/game.hpp"
#include "rollcall/rational.hpp"

namespace rollcall {

// Default ceiling on (call order, profile) pairs in exact enumerations.
inline constexpr std::uint64_t kMaxExactPairs = 1'000'000'000;

struct EnumLimits {
  std::uint64_t max_pairs = kMaxExactPairs;
  std::size_t max_partial_entries = kMaxPartialEntries;
};

// Outputs still possible at some point of a roll call: the first
// `declared` callers of `order` have spoken the levels `a` assigns them,
// everyone later is free. Sorted ascending.
struct UncertaintySet {
  std::vector<int> outputs;
  bool is_interval() const;
};
UncertaintySet reachable_outputs(const GameTable& g, const CallOrder& order,
                                 const VoteProfile& a, int declared);

// Uncertainty removed by the declaration at 1-based `position`:
// |reachable after position-1 speakers| - |reachable after position|.
// Nonnegative, and summed over positions it telescopes to image_size - 1.
int tau(const GameTable& g, const CallOrder& order, const VoteProfile& a,
        int position);

// For k == 2 games with both outputs reachable: the unique player whose
// declaration settles the outcome under this order and profile.
int pivot_player(const GameTable& g, const CallOrder& order,
                 const VoteProfile& a);

// Threshold bands: for each of the k-1 thresholds t (between outputs t and
// t+1), the running state -1 / 0 / +1 = settled at-or-below t / open /
// settled above t. bands(h) is the state vector after h declarations.
struct ThresholdBands {
  std::vector<std::vector<int>> state;  // (n+1) x (k-1)
};
ThresholdBands threshold_bands(const GameTable& g, const CallOrder& order,
                               const VoteProfile& a);

// The moments where a threshold settles. For games with a full-interval
// image, every (order, profile) produces exactly k-1 events in total; when
// the game is additionally output-rough, the event count at each position
// equals tau there (with gapped reachable sets the two can differ).
struct PivotEvent {
  int position;   // 1-based call position whose declaration settled it
  int threshold;  // 1..k-1
  int direction;  // -1 settled at-or-below, +1 settled above
};
std::vector<PivotEvent> pivot_events(const GameTable& g,
                                     const CallOrder& order,
                                     const VoteProfile& a);

// Which enumeration core phi_exact used (or is forced to use).
//   IntervalTracking — two table probes per declaration, tracking the
//                      (lowest, highest) completions; valid for monotone
//                      games whose reachable sets are intervals.
//   GeneralCounting  — bit-set cardinalities from ReachableSets; any game.
enum class ExactPath { Auto, IntervalTracking, GeneralCounting };

struct ExactInfluence {
  std::vector<Rational> phi;
  // Integer uncertainty-reduction totals per player over all (order,
  // profile) pairs; phi = counts / denominator with
  // denominator = n! * j^n * (image_size - 1). Zero denominator marks the
  // constant-game case (phi all zero by convention).
  std::vector<BigInt> counts;
  BigInt denominator;
  int image_size = 1;
  ExactPath path_used = ExactPath::GeneralCounting;
};

// Uniform-distribution influence, exact. Auto picks IntervalTracking when
// the game is monotone and output-rough (always true for k == 2), else
// GeneralCounting. Requesting IntervalTracking for an ineligible game
// throws std::domain_error; blowing max_pairs throws
// enumeration_guard_error.
ExactInfluence phi_exact(const GameTable& g, ExactPath path = ExactPath::Auto,
                         const EnumLimits& limits = {});

// Influence when profiles are drawn from `dist` (call orders stay uniform):
// phi_i = (1/n!) * sum_{order, a} p(a) * tau_i(order, a) / (image_size - 1).
// Exact rationals; all-zero for constant games.
std::vector<Rational> phi_weighted(const GameTable& g,
                                   const VoteDistribution& dist,
                                   const EnumLimits& limits = {});

struct McInfluence {
  std::vector<double> phi;
  std::vector<double> std_error;  // per player, sqrt(sample var / samples)
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  // Continuous evaluators only: samples whose game value fell outside [0,1].
  std::uint64_t range_violations = 0;
};

// Monte-Carlo estimate of phi_weighted: per sample draw a profile from
// `dist` and a uniform call order, accumulate tau / (image_size - 1).
// Deterministic in (seed, samples) regardless of `threads`: work is cut
// into fixed 65536-sample blocks with SplitMix64-derived per-block seeds
// and merged in block order.
McInfluence phi_montecarlo(const GameTable& g, const VoteDistribution& dist,
                           std::uint64_t samples, std::uint64_t seed,
                           int threads = 1);

}  // namespace rollcall
