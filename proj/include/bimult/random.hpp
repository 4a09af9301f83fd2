#pragma once

#include <cstdint>
#include <vector>

#include "bimult/types.hpp"

namespace bimult {

/// splitmix64 step; used both as a generator and to split per-trial seeds
/// from a root seed (counter-based, so trial k is independent of trial count).
inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline uint64_t split_seed(uint64_t root, uint64_t counter) {
  uint64_t s = root ^ (0x9e3779b97f4a7c15ULL * (counter + 1));
  return splitmix64(s);
}

/// Small deterministic RNG. Portable across platforms, unlike the
/// distributions in <random>.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {
    // warm up so nearby seeds decorrelate
    for (int i = 0; i < 4; ++i) splitmix64(state_);
  }

  uint64_t next_u64() { return splitmix64(state_); }

  /// Uniform double in [0, 1) with 53-bit resolution.
  double uniform() { return (next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller.
  double gaussian() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    return r * std::cos(2.0 * M_PI * u2);
  }

  /// Standard complex Gaussian (independent N(0,1) real and imaginary parts).
  cplx complex_gaussian() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    return {r * std::cos(2.0 * M_PI * u2), r * std::sin(2.0 * M_PI * u2)};
  }

  std::vector<cplx> complex_gaussian_vector(size_t n) {
    std::vector<cplx> v(n);
    for (auto& z : v) z = complex_gaussian();
    return v;
  }

  /// Uniform dyadic rational in [lo, hi) with `bits` fractional bits.
  /// Exactly representable; handy for tests that need exact arithmetic.
  double dyadic(double lo, double hi, int bits) {
    double step = std::ldexp(1.0, -bits);
    uint64_t span = static_cast<uint64_t>((hi - lo) / step);
    uint64_t k = next_u64() % span;
    return lo + static_cast<double>(k) * step;
  }

 private:
  uint64_t state_;
};

inline FiniteSequence random_sequence(int radius, Rng& rng) {
  FiniteSequence a(radius);
  for (auto& v : a.values) v = rng.complex_gaussian();
  return a;
}

inline FiniteSequence2D random_sequence2d(int radius, Rng& rng) {
  FiniteSequence2D a(radius);
  for (auto& v : a.values) v = rng.complex_gaussian();
  return a;
}

inline PeriodicFunction random_periodic(int degree, Rng& rng) {
  PeriodicFunction f(degree);
  for (auto& v : f.coeffs) v = rng.complex_gaussian();
  return f;
}

}  // namespace bimult
