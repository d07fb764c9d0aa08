#pragma once

// Deterministic fixture series shared by the golden-file generator and the
// tests. Uses raw mt19937_64 output so values do not depend on the
// standard library's distribution implementations.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace fixtures {

inline constexpr std::uint64_t kGoldenSeed = 20210106;

inline double unit(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

struct XY {
  double x;
  double y;
};

// 200 count-valued points at x = 1..200: each y is the number of successes
// in 6 Bernoulli trials with p = (1.5 + sin(x / 30)) / 6.
inline std::vector<XY> golden_series() {
  std::mt19937_64 eng(kGoldenSeed);
  std::vector<XY> out;
  for (int i = 1; i <= 200; ++i) {
    const double p = (1.5 + std::sin(i / 30.0)) / 6.0;
    int hits = 0;
    for (int t = 0; t < 6; ++t) hits += unit(eng) < p ? 1 : 0;
    out.push_back({static_cast<double>(i), static_cast<double>(hits)});
  }
  return out;
}

}  // namespace fixtures
