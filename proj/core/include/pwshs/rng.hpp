#pragma once

#include <cstdint>
#include <random>

#include "pwshs/common.hpp"

namespace pwshs {

/// splitmix64 step; used to derive independent child seeds from a base seed.
std::uint64_t seed_mix(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                       std::uint64_t c = 0);

/// Deterministic random stream. All variates are produced from raw mt19937_64
/// output through fixed arithmetic (no std::*_distribution), so sequences are
/// identical across standard libraries and across parallel schedules as long
/// as each task owns its own stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t raw() { return gen_(); }

  /// Uniform on [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  /// Uniform on (0, 1]; safe as a log() argument.
  double uniform01_open() {
    return (static_cast<double>(gen_() >> 11) + 1.0) * 0x1.0p-53;
  }

  /// Uniform integer in [0, n). n must be > 0.
  std::uint64_t uniform_int(std::uint64_t n);

  /// Standard normal via Box-Muller (stateless: one draw costs two uniforms).
  double normal();

  /// d independent standard normals.
  Vec normal_vec(Eigen::Index d);

 private:
  std::mt19937_64 gen_;
};

}  // namespace pwshs
