#pragma once

#include <cstdint>

namespace cf {

// Deterministic generator (splitmix64). The randomized suites promise
// byte-identical output for a given seed, so no standard-library
// distributions here; those vary across implementations.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // In [0, n); n >= 1. Modulo bias is immaterial at these ranges.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  // Inclusive range.
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

private:
  std::uint64_t state_;
};

} // namespace cf
