#pragma once

#include <cstdint>
#include <random>

namespace gendirac {

/// Seeded generator with a platform-independent real mapping; the standard
/// distributions are implementation-defined, which would break byte-identical
/// reports across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Magnitude uniform in [lo, hi], random sign.
  double signed_magnitude(double lo, double hi) {
    const double magnitude = uniform(lo, hi);
    return (engine_() & 1U) != 0 ? magnitude : -magnitude;
  }

  /// Integer uniform in [0, n).
  int index(int n) { return static_cast<int>(uniform() * n); }

  /// Child seed for an independent sub-stream.
  std::uint64_t split() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace gendirac
