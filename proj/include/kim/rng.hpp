#pragma once

#include <cstdint>

namespace kim {

/// Seed-deterministic generator shared by every random family.
///
/// The stream is fully specified so that other implementations can reproduce
/// generated instances bit for bit:
///
///   * seeding: state = splitmix64(seed), where splitmix64(x) adds
///     0x9E3779B97F4A7C15 to x and applies the usual 30/27/31 xor-shift
///     multiply finalizer; a zero result is replaced by 0x9E3779B97F4A7C15.
///   * next():  xorshift64* with shifts (12, 25, 27) and output multiplier
///     0x2545F4914F6CDD1D.
///   * below(b): rejection sampling; draws r = next() until
///     r >= (2^64 - b) mod b, then returns r mod b.
///   * coin(): next() >> 63.
class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t seed) : state_(splitmix64(seed)) {
    if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;
  }

  std::uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1DULL;
  }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  /// Uniform integer in [lo, hi].
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool coin() { return (next() >> 63) != 0; }

  static std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
  }

 private:
  std::uint64_t state_;
};

}  // namespace kim
