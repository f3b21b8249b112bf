#pragma once

#include <cstdint>

namespace latcosine {

/// Counter-based generator: draw i is a hash of (seed, i).  Streams can be
/// split off deterministically, so parallel consumers stay reproducible no
/// matter in which order they run.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t next_u64() { return hash(seed_, counter_++); }

  /// Uniform in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * next_double(); }

  /// Uniform integer in [0, m).
  std::uint64_t next_below(std::uint64_t m) { return next_u64() % m; }

  /// Independent substream identified by stream_id.
  CounterRng stream(std::uint64_t stream_id) const {
    return CounterRng(hash(seed_ ^ 0x5851f42d4c957f2dull, stream_id));
  }

  static std::uint64_t hash(std::uint64_t seed, std::uint64_t ctr) {
    // splitmix64 of seed + ctr * golden ratio
    std::uint64_t x = seed + 0x9e3779b97f4a7c15ull * (ctr + 1);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebull;
    x ^= x >> 31;
    return x;
  }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace latcosine
