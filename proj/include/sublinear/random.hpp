#pragma once

#include "sublinear/scalar.hpp"

#include <cstdint>
#include <limits>

namespace sublinear {

/// SplitMix64 finalizer (Steele, Lea, Flood). Used to expand user seeds and
/// to derive independent per-trial seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index + 0x632BE59BD9B4E019ULL));
}

/// xorshift64* (Vigna 2016): shifts 12, 25, 27 and output multiplier
/// 0x2545F4914F6CDD1D. The state is seeded through splitmix64 and never zero.
///
/// Sampling helpers below are defined in terms of next() only, so instance
/// streams are identical across platforms and standard libraries.
class Xorshift64Star {
 public:
  using result_type = std::uint64_t;

  explicit Xorshift64Star(std::uint64_t seed) : state_(splitmix64(seed)) {
    if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;
  }

  static constexpr result_type min() { return 1; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1DULL;
  }
  result_type operator()() { return next(); }

  /// Uniform integer in [0, n), by rejection on the top bits.
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = max() - max() % n;
    std::uint64_t r;
    do {
      r = next();
    } while (r >= limit);
    return r % n;
  }

  /// Uniform integer in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool coin(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  std::uint64_t state_;
};

/// Denominator of the dyadic grid used for sampled table entries and scalars.
inline constexpr std::int64_t kSampleResolution = 1 << 16;

/// Uniform draw on the dyadic grid {lo + (hi-lo) k / 2^16}. Both arithmetic
/// modes see the same values, so rational and float runs sample the same
/// instances.
template <Scalar T>
T sample_uniform(Xorshift64Star& rng, std::int64_t lo, std::int64_t hi) {
  const std::int64_t k = rng.between(0, kSampleResolution);
  return T(lo) + T(hi - lo) * ratio<T>(k, kSampleResolution);
}

}  // namespace sublinear
