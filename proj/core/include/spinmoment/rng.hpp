#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace spinmoment::quad {

/// splitmix64, used only to expand seeds
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// xoshiro256** with an owned, explicitly seeded state. The Monte Carlo
/// engine instantiates one generator per sample chunk so runs are
/// bit-reproducible regardless of threading.
class Xoshiro256ss {
 public:
  explicit Xoshiro256ss(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& w : s_) w = splitmix64(sm);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[1] * 5ULL, 7) * 9ULL;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// uniform double in (0, 1]
  double uniform_pos() { return ((next() >> 11) + 1) * 0x1.0p-53; }

  /// uniform double in [0, 1)
  double uniform() { return (next() >> 11) * 0x1.0p-53; }

  /// one standard-normal pair via Box-Muller (fixed consumption: 2 uniforms)
  void normal_pair(double& a, double& b) {
    const double u1 = uniform_pos();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    a = r * std::cos(t);
    b = r * std::sin(t);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  std::uint64_t s_[4];
};

/// stream seed for chunk `index` of a run seeded with `seed`
inline std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t sm = seed ^ (0xa0761d6478bd642fULL + index * 0xe7037ed1a0b428dbULL);
  return splitmix64(sm);
}

}  // namespace spinmoment::quad
