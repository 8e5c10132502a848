#pragma once

#include <cstddef>
#include <cstdint>

#include "cayley/element.hpp"

namespace cayley {

/// SplitMix64. Fixed output sequence on every platform, unlike the standard
/// distributions.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) noexcept {
    const double unit = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
  }

  /// Real and imaginary parts uniform in [-1, 1).
  Complex complex_unit_box() noexcept {
    const double re = uniform(-1.0, 1.0);
    return {re, uniform(-1.0, 1.0)};
  }

 private:
  std::uint64_t state_;
};

/// Independent stream for item `index` of a run seeded with `seed`.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t index) noexcept {
  SplitMix64 mixer(seed ^ (0xd1b54a32d192ed03ULL * (index + 1)));
  return SplitMix64(mixer.next());
}

Element random_element(SplitMix64& rng, std::size_t dim);

/// Real coefficients only, uniform in [-1, 1).
Element random_real_element(SplitMix64& rng, std::size_t dim);

}  // namespace cayley
