#pragma once

// Deterministic random streams shared by the permutation test and the
// scenario generator. The whole scheme is fixed so that results are
// reproducible across implementations:
//
//  * SplitMix64 is the only generator.
//  * A permutation test seeded with `seed` gives permutation `p` its own
//    stream, seeded with the p-th output (0-based) of SplitMix64(seed).
//  * Bounded integers use rejection sampling (no modulo bias).
//  * Uniform reals in (0,1) take the top 53 bits plus a half-ulp offset.

#include <cstdint>
#include <span>
#include <utility>

namespace marsrank::rng {

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    state_ += kGoldenGamma;
    return mix64(state_);
  }

  // Uniform integer in [0, bound). bound must be nonzero.
  constexpr std::uint64_t below(std::uint64_t bound) noexcept {
    // Values under 2^64 mod bound would bias the low residues.
    const std::uint64_t reject_under = (0 - bound) % bound;
    std::uint64_t x = next();
    while (x < reject_under) x = next();
    return x % bound;
  }

  // Uniform real strictly inside (0, 1).
  constexpr double open_unit() noexcept {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

// Output number `index` of SplitMix64(seed), computed without stepping.
constexpr std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return mix64(seed + (index + 1) * kGoldenGamma);
}

// Fisher-Yates, descending index.
template <typename T>
constexpr void shuffle(std::span<T> items, SplitMix64& gen) noexcept {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(gen.below(i));
    using std::swap;
    swap(items[i - 1], items[j]);
  }
}

}  // namespace marsrank::rng
