#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace rollcall {

// One SplitMix64 step; the standard seed-derivation stream.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Deterministic random stream used everywhere randomness appears.
//
// The contract is bit-reproducibility across platforms and thread counts:
//  * the core generator is std::mt19937_64 (output fully specified by the
//    standard) seeded from a single 64-bit seed;
//  * child streams (Monte-Carlo blocks, sweep instances) get their seeds via
//    SplitMix64 applied to (seed, stream index), never by sharing state;
//  * bounded draws use rejection sampling (no modulo bias, no
//    distribution-object variance across standard libraries);
//  * doubles take the top 53 bits, uniform on [0,1).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), gen_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return gen_(); }

  // Uniform on [0, n); n must be nonzero.
  std::uint64_t bounded(std::uint64_t n) {
    const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
    std::uint64_t r;
    do {
      r = gen_();
    } while (r >= limit);
    return r % n;
  }

  // Uniform on [0,1) with 53-bit resolution.
  double next_double() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  // Independent child stream; deterministic in (seed, stream).
  Rng split(std::uint64_t stream) const {
    std::uint64_t state = seed_ ^ (0x6a09e667f3bcc909ULL + stream);
    std::uint64_t derived = splitmix64_next(state);
    derived ^= splitmix64_next(state);
    return Rng(derived);
  }

  // In-place Fisher-Yates; the draw order is part of the fixed stream.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t pick = static_cast<std::size_t>(bounded(i));
      std::swap(v[i - 1], v[pick]);
    }
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 gen_;
};

}  // namespace rollcall
