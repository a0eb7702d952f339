// Deterministic RNG wrapper. std::mt19937_64 is bit-exact across platforms
// but the standard distributions are not, so the draw helpers live here.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace honeyiot {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Derives a stream seed from a base seed and an index (per-episode seeding
// for parallel rollout collection: the result is independent of scheduling).
inline uint64_t derive_seed(uint64_t base, uint64_t index) {
  return splitmix64(base ^ splitmix64(index + 0x51ed270b7a2ca8ddULL));
}

class Rng {
 public:
  Rng() : engine_(0) {}
  explicit Rng(uint64_t seed) : engine_(splitmix64(seed)) {}

  void seed(uint64_t s) { engine_.seed(splitmix64(s)); }

  uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1).
  double next_double() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, n). Rejection-free modulo bias is negligible for
  // the small ranges used here, but do the rejection anyway: it is cheap.
  uint64_t next_below(uint64_t n) {
    if (n <= 1) return 0;
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t v = engine_();
    while (v >= limit) v = engine_();
    return v % n;
  }

  // Samples an index from unnormalized non-negative weights.
  size_t pick_weighted(const std::vector<double>& weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    double r = next_double() * total;
    for (size_t i = 0; i < weights.size(); ++i) {
      r -= weights[i];
      if (r < 0.0) return i;
    }
    return weights.empty() ? 0 : weights.size() - 1;
  }

  size_t pick_counts(const std::vector<uint64_t>& counts, uint64_t total) {
    uint64_t r = next_below(total);
    for (size_t i = 0; i < counts.size(); ++i) {
      if (r < counts[i]) return i;
      r -= counts[i];
    }
    return counts.empty() ? 0 : counts.size() - 1;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace honeyiot
