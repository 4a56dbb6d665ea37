#pragma once

#include <cstdint>
#include <random>

namespace mvv {

/// SplitMix64 finalizer; used to spread user seeds into independent streams.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Seed for sub-stream `index` of a user-visible seed. Trial loops draw one
/// sub-seed per trial so parallel execution reproduces serial results.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index + 0x632BE59BD9B4E019ULL));
}

/// Deterministic generator. std::mt19937_64 raw output is pinned by the
/// standard; the bounded draw below avoids std::uniform_int_distribution,
/// whose mapping is implementation-defined.
class prng {
 public:
  explicit prng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, n) by rejection; n > 0.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = n * (UINT64_MAX / n);
    std::uint64_t v = engine_();
    while (v >= limit) v = engine_();
    return v % n;
  }

  /// Uniform integer in [-bound, bound].
  long entry(long bound) {
    return static_cast<long>(below(2 * static_cast<std::uint64_t>(bound) + 1)) - bound;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace mvv
