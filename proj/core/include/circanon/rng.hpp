#pragma once

#include <cstdint>
#include <initializer_list>

namespace circanon {

/// Deterministic splitmix64 generator. Streams derived via derive() are
/// independent of how many draws the parent has consumed, so trials can be
/// partitioned across workers while keeping bit-exact reproducibility.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  bool bernoulli() { return (next_u64() >> 63) != 0; }

  /// Uniform in [0, bound); unbiased (Lemire rejection).
  std::uint64_t uniform_below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    std::uint64_t x = next_u64();
    unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
    std::uint64_t low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        x = next_u64();
        m = static_cast<unsigned __int128>(x) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Stream keyed by a path of indices, e.g. derive(seed, {n, trial}).
  static Rng derive(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
    Rng r(seed);
    for (std::uint64_t v : path) {
      r.state_ ^= v + 0x9E3779B97F4A7C15ull + (r.state_ << 6) + (r.state_ >> 2);
      r.next_u64();
    }
    return r;
  }

 private:
  std::uint64_t state_;
};

}  // namespace circanon
