#pragma once

#include <cmath>
#include <cstdint>

namespace ucb {

// Finalizer of SplitMix64 (Steele, Lea & Flood 2014); full-avalanche 64-bit mix.
inline std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGolden64 = 0x9E3779B97F4A7C15ULL;

// Seed of stream `stream` derived from `master`. Equivalent to splitting a
// SplitMix64 generator keyed on mix64(master), so distinct streams are
// decorrelated regardless of how (master, stream) pairs are enumerated.
inline std::uint64_t stream_seed(std::uint64_t master, std::uint64_t stream) noexcept {
  return mix64(mix64(master) + kGolden64 * (stream + 1));
}

// Counter-based SplitMix64 stream: state_k = seed + k * kGolden64 and the
// k-th output is mix64(state_k). Uniform variates lie strictly inside (0,1);
// Gaussian variates come from Box-Muller with the sine partner cached, so a
// stream consumes exactly one uniform pair per two normals.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next_u64() noexcept { return mix64(state_ += kGolden64); }

  double next_unit() noexcept {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double next_normal() noexcept {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    constexpr double kTwoPi = 6.28318530717958647692;
    const double r = std::sqrt(-2.0 * std::log(next_unit()));
    const double a = kTwoPi * next_unit();
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace ucb
