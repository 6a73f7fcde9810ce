#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace scalefree {

/// SplitMix64 finalizer. Bijective on 64-bit words.
[[nodiscard]] constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Derives an independent stream seed from a base seed and two indices.
/// Used as derive_seed(seed, column, subsample) for ARES fitting and with
/// the domain tags below for the experiment-level streams.
[[nodiscard]] constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a,
                                                  std::uint64_t b) noexcept {
  std::uint64_t h = mix64(base);
  h = mix64(h ^ (a * 0xD6E8FEB86659FD93ULL));
  h = mix64(h ^ (b * 0xC2B2AE3D27D4EB4FULL));
  return h;
}

/// Expansion of the single user-facing seed into the streams an evaluation
/// run consumes.
struct SeedPlan {
  std::uint64_t fold_seed;
  std::uint64_t ares_seed;

  static constexpr std::uint64_t kFoldDomain = 0x464F4C44;  // "FOLD"
  static constexpr std::uint64_t kAresDomain = 0x41524553;  // "ARES"

  [[nodiscard]] static constexpr SeedPlan from_global(std::uint64_t seed) noexcept {
    return {derive_seed(seed, kFoldDomain, 0), derive_seed(seed, kAresDomain, 0)};
  }
};

/// Deterministic generator with platform-independent derived draws
/// (std::uniform_int_distribution is implementation-defined, so it is not used).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace scalefree
