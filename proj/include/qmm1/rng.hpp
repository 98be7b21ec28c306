#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace qmm1 {

// PRNG contract ("rng-v1"): every stochastic path draws from std::mt19937_64,
// whose algorithm is fully pinned by the C++ standard, and maps raw 64-bit
// outputs to doubles itself. Seeds therefore reproduce byte-identical results
// across platforms, compilers, and builds.
inline constexpr const char* kRngVersion = "rng-v1 (mt19937_64, 53-bit uniforms, inverse-CDF)";

// splitmix64 output function; used to derive independent stream seeds.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Seed for stream `stream` of a generator family rooted at `base`.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  return mix64(base + (stream + 1) * 0x9e3779b97f4a7c15ULL);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1) from the top 53 bits of one engine draw.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Inverse-transform exponential variate with the given rate (> 0).
  double exponential(double rate) { return -std::log1p(-uniform01()) / rate; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qmm1
