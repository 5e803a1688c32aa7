#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <utility>

namespace netsel {

// Counter-based random stream: every draw is a pure function of
// (seed, purpose tag, indices). No hidden state, so generation is
// reproducible regardless of evaluation order and safe to split across
// replicates or candidate edges.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  // SplitMix64 finalizer; full-avalanche 64-bit mix.
  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::uint64_t raw(std::uint64_t tag, std::uint64_t i = 0, std::uint64_t j = 0) const {
    return mix(mix(mix(seed_ ^ 0x243f6a8885a308d3ULL) ^ tag) ^ mix(i ^ mix(j)));
  }

  // Uniform double in [0, 1).
  double uniform(std::uint64_t tag, std::uint64_t i = 0, std::uint64_t j = 0) const {
    return (raw(tag, i, j) >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound, std::uint64_t tag, std::uint64_t i = 0, std::uint64_t j = 0) const {
    return raw(tag, i, j) % bound;
  }

  // Pair of independent standard normals (Box-Muller).
  std::pair<double, double> normal_pair(std::uint64_t tag, std::uint64_t i = 0) const {
    double u1 = uniform(tag, i, 0x517cc1b727220a95ULL);
    double u2 = uniform(tag, i, 0x6c62272e07bb0142ULL);
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    return {r * std::cos(theta), r * std::sin(theta)};
  }

  // Derived generator for a sub-stream (replicate, instance, ...).
  CounterRng derive(std::uint64_t tag, std::uint64_t i = 0) const { return CounterRng(raw(tag, i)); }

 private:
  std::uint64_t seed_;
};

}  // namespace netsel
