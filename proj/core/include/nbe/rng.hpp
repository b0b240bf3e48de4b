#pragma once

#include <cstdint>
#include <random>

namespace nbe {

/// Deterministic generator used for every stochastic mode. Draws are fully
/// specified here (53-bit uniforms from mt19937_64), so identical seeds give
/// identical streams independent of standard-library distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  std::uint64_t next_u64() { return gen_(); }

  /// Index drawn according to the given cumulative weights (last entry ~ 1).
  int pick_cumulative(const double* cumulative, int count) {
    double u = uniform01();
    for (int i = 0; i + 1 < count; ++i) {
      if (u < cumulative[i]) return i;
    }
    return count - 1;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace nbe
