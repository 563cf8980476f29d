#include "advkit/rng.hpp"

namespace advkit {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

CounterRng::CounterRng(std::uint64_t seed) noexcept : seed_(seed), key_(splitmix64(seed)) {}

CounterRng::result_type CounterRng::operator()() noexcept {
  const std::uint64_t c = counter_++;
  return splitmix64(key_ ^ splitmix64(c * kGolden + 0x632BE59BD9B4E019ULL));
}

std::uint64_t CounterRng::uniform(std::uint64_t bound) noexcept {
  // Lemire's multiply-shift with rejection; unbiased.
  std::uint64_t x = (*this)();
  __uint128_t m = static_cast<__uint128_t>(x) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      x = (*this)();
      m = static_cast<__uint128_t>(x) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

std::int64_t CounterRng::uniform_in(std::int64_t lo, std::int64_t hi) noexcept {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(uniform(span));
}

double CounterRng::uniform01() noexcept {
  return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

bool CounterRng::bernoulli(double p) noexcept { return uniform01() < p; }

CounterRng CounterRng::derive(std::uint64_t index) const noexcept {
  return CounterRng(splitmix64(seed_ ^ splitmix64(index + 0xD1B54A32D192ED03ULL)));
}

}  // namespace advkit
