#pragma once

#include "rollcall/distribution.hpp"
#include "rollcall/game.hpp"
#include "rollcall/rng.hpp"

namespace rollcall {

// Seeded random-instance builders shared by the verification CLI and the
// test sweeps. All draws come from the caller's Rng, so instances are
// reproducible from a seed alone.

struct GameGenOptions {
  bool surjective = true;      // reject games not hitting all k outputs
  bool output_rough = false;   // reject games failing the interval property
  int max_attempts = 5000;
};

// Uniformly random table (no structure).
GameTable random_game(int n, int j, int k, Rng& rng);

// Random monotone game: profiles are filled in an order extending the
// coordinate-wise partial order, each value drawn uniformly from
// [max over lower neighbors, k]; bottom is pinned to 1 and top to k, then
// rejection enforces the requested options. Throws std::runtime_error if
// max_attempts rejections pass without a hit.
GameTable random_monotonic_game(int n, int j, int k, Rng& rng,
                                const GameGenOptions& options = {});

// IID level masses p_l = w_l / sum(w), small random nonnegative integers w.
VoteDistribution random_iid_distribution(int j, Rng& rng);

// Anonymous (j = 2) per-profile masses q_h = w_h / sum_h C(n,h) w_h.
VoteDistribution random_anonymous_distribution(int n, Rng& rng);

}  // namespace rollcall
