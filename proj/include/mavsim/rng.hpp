#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace mavsim {

// Deterministic random stream. The engine is std::mt19937_64 (whose output
// sequence is fixed by the standard); the uniform/gaussian transforms are
// implemented here so that draws are reproducible bit-for-bit regardless of
// the standard library's distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 bits of mantissa.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Box-Muller; consumes exactly two uniforms per draw.
  double gaussian(double mean, double sigma) {
    double u1 = uniform01();
    double u2 = uniform01();
    // Guard against log(0).
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    return mean + sigma * r * std::cos(2.0 * M_PI * u2);
  }

 private:
  std::mt19937_64 engine_;
};

// FNV-1a over the stream name, mixed with the master seed through
// splitmix64. Changing one component's parameters must not perturb another
// component's noise sequence, so every consumer derives its own stream.
inline std::uint64_t derive_seed(std::uint64_t master_seed,
                                 std::string_view stream_name) {
  std::uint64_t h = 1469598103934665603ull;
  for (const char c : stream_name) {
    h ^= static_cast<std::uint8_t>(c);
    h *= 1099511628211ull;
  }
  std::uint64_t z = master_seed ^ h;
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline Rng derive_stream(std::uint64_t master_seed,
                         std::string_view stream_name) {
  return Rng(derive_seed(master_seed, stream_name));
}

}  // namespace mavsim
