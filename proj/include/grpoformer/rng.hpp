#ifndef GRPOFORMER_RNG_HPP_
#define GRPOFORMER_RNG_HPP_

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace grpoformer {

// Seeded stream with explicit value transforms. mt19937_64's raw output is
// fully specified by the standard, and the transforms below avoid the
// implementation-defined std::*_distribution classes, so every draw is
// bit-reproducible across platforms.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next_u64() { return gen_(); }

  // [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // [0, n); n > 0. Modulo bias is < 2^-58 for the bin counts used here.
  int64_t uniform_int(int64_t n) {
    return static_cast<int64_t>(next_u64() % static_cast<uint64_t>(n));
  }

  // Box-Muller, one value per call (two uniforms consumed, no cached spare).
  double gaussian() {
    double u1 = uniform();
    double u2 = uniform();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    double r = std::sqrt(-2.0 * std::log(u1));
    return r * std::cos(6.283185307179586476925286766559 * u2);
  }

 private:
  std::mt19937_64 gen_;
};

// Derives independent substream seeds from a master seed and a label, e.g.
// derive_seed(master, "task=sphere2d|method=grpoformer|seed=3|stream=sample").
// FNV-1a over the label mixed with splitmix64 finalizers.
inline uint64_t derive_seed(uint64_t master, std::string_view label) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (char c : label) {
    h ^= static_cast<uint8_t>(c);
    h *= 0x100000001b3ull;
  }
  uint64_t z = master + 0x9e3779b97f4a7c15ull + h;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace grpoformer

#endif  // GRPOFORMER_RNG_HPP_
