#pragma once

#include <cmath>
#include <cstdint>

namespace pauliwalk {

/// Counter-based splittable generator: the stream for (seed, stream_id) is a
/// pure function of both, so step i of a walk can be regenerated in isolation
/// and distinct streams can be consumed concurrently.
class StepRng {
 public:
  StepRng(std::uint64_t seed, std::uint64_t stream_id) {
    state_ = mix(mix(seed + 0x9E3779B97F4A7C15ull) ^
                 mix(stream_id + 0xD1B54A32D192ED03ull));
  }

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix(state_);
  }

  /// Uniform double in the open interval (0, 1).
  double next_unit_open() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Uniform double in (-half_width, half_width).
  double next_symmetric(double half_width) {
    return (2.0 * next_unit_open() - 1.0) * half_width;
  }

  /// Uniform integer in [0, bound), unbiased by rejection.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t limit = ~0ull - (~0ull % bound);
    std::uint64_t v;
    do {
      v = next_u64();
    } while (v >= limit);
    return v % bound;
  }

  /// Standard normal via Box-Muller.
  double next_normal() {
    const double u1 = next_unit_open();
    const double u2 = next_unit_open();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace pauliwalk
