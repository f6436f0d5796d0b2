#pragma once

#include <cstdint>

namespace gkm {

/// Counter-based uniform generator. Draw i of stream `seed` is
///
///   z  = seed + (i + 1) * 0x9E3779B97F4A7C15        (mod 2^64)
///   z  = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z  = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   z  =  z ^ (z >> 31)
///   u  = ((z >> 11) + 0.5) * 2^-53                   in (0, 1)
///
/// i.e. the SplitMix64 finalizer applied to a Weyl counter. Any draw can be
/// computed independently, so partitioned or parallel consumers reproduce the
/// same stream bit for bit.
class CounterRng {
 public:
  explicit constexpr CounterRng(std::uint64_t seed) : seed_(seed) {}

  constexpr std::uint64_t bits(std::uint64_t index) const {
    std::uint64_t z = seed_ + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  constexpr double uniform(std::uint64_t index) const {
    return (static_cast<double>(bits(index) >> 11) + 0.5) * 0x1.0p-53;
  }

  constexpr std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
};

}  // namespace gkm
