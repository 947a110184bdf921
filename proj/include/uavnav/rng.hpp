#pragma once

#include <cstdint>
#include <random>

namespace uavnav {

/// Deterministic uniform draws on top of mt19937_64.
///
/// std::uniform_*_distribution output is implementation-defined, so scene
/// generation would not be reproducible across standard libraries. These
/// helpers pin the exact mapping from engine output to values.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) {
    const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
  }

  /// Uniform int in [lo, hi], inclusive.
  int uniform_int(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(next_u64() % span);
  }

  bool bernoulli(double p) { return uniform(0.0, 1.0) < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace uavnav
