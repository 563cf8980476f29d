#pragma once

#include <cstdint>
#include <limits>

namespace advkit {

/// Counter-based generator: the i-th output is a pure function of (seed, i),
/// built from the SplitMix64 finalizer. Streams for independent trials are
/// derived with `derive(index)`, so sweeps reproduce regardless of the order
/// in which trials run.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t seed) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept;

  /// Uniform integer in [0, bound). `bound` must be positive.
  std::uint64_t uniform(std::uint64_t bound) noexcept;
  /// Uniform integer in [lo, hi].
  std::int64_t uniform_in(std::int64_t lo, std::int64_t hi) noexcept;
  /// Uniform double in [0, 1).
  double uniform01() noexcept;
  bool bernoulli(double p) noexcept;

  CounterRng derive(std::uint64_t index) const noexcept;

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t counter() const noexcept { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

}  // namespace advkit
