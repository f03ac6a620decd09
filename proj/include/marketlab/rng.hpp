#pragma once

// Seeded randomness for every stochastic component.
//
// One engine (std::mt19937_64, fully specified by the C++ standard) plus
// hand-rolled transforms, because the standard <random> distributions are
// implementation-defined and would break cross-platform reproducibility.
// Sub-streams are derived with the splitmix64 finalizer, so generating
// trader i never depends on how many draws trader i-1 consumed.

#include <cmath>
#include <cstdint>
#include <random>

namespace marketlab {

/// splitmix64 finalizer (Vigna). Bijective 64-bit mix.
inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Seed for sub-stream `index` of a root seed. Used both for per-trader
/// streams and for per-component purpose seeds.
inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed + (index + 1) * 0x9E3779B97F4A7C15ull);
}

/// Purpose tags so distinct components of one scenario never share a stream.
namespace rng_purpose {
inline constexpr std::uint64_t kBuyers = 0x01;
inline constexpr std::uint64_t kSellers = 0x02;
inline constexpr std::uint64_t kAuction = 0x03;
inline constexpr std::uint64_t kAssetEstimates = 0x04;
inline constexpr std::uint64_t kAssetSteps = 0x05;
inline constexpr std::uint64_t kRepetition = 0x06;
}  // namespace rng_purpose

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1), 53 mantissa bits.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in (0, 1]; safe as a log/pow argument.
  double uniform_open() { return 1.0 - uniform(); }

  /// Uniform in [a, b); returns a when a == b.
  double uniform_real(double a, double b) { return a + uniform() * (b - a); }

  /// Uniform index in [0, n). Rejection sampling, bias-free. n >= 1.
  std::size_t uniform_index(std::size_t n) {
    const std::uint64_t bound = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x = next_u64();
    while (x >= limit) x = next_u64();
    return static_cast<std::size_t>(x % bound);
  }

  bool coin() { return (next_u64() & 1ull) != 0; }

  /// Gaussian via Box-Muller; consumes exactly two draws.
  double normal(double mean, double sd) {
    const double u1 = uniform_open();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    return mean + sd * r * std::cos(2.0 * 3.14159265358979323846 * u2);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace marketlab
