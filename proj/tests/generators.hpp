#pragma once

// Hand-rolled generators for property tests. Each property test draws its
// inputs from a fixed-seed SplitMix64 stream so failures are reproducible.

#include <cmath>
#include <complex>

#include "gyroqubit/hermitian2.hpp"
#include "gyroqubit/qubit_density.hpp"
#include "gyroqubit/rng.hpp"

namespace gyroqubit::gen {

inline constexpr int kCases = 2000;

inline SplitMix64 stream(const char* name, std::uint64_t i) { return SplitMix64::for_trial(2024, name, i); }

inline BlochVector<double> ball(SplitMix64& r, double cap = 0.999) { return sample_stratified(r, cap, 0.2); }

/// Positive definite matrix with eigenvalues e^{U(-4,4)} in a random frame.
inline Hermitian2<double> positive_definite(SplitMix64& r) {
  const auto d = sample_direction(r);
  const double l1 = std::exp(r.uniform(-4.0, 4.0)), l2 = std::exp(r.uniform(-4.0, 4.0));
  // (l1 + l2)/2 I + (l1 - l2)/2 (d . sigma)
  const double m = (l1 + l2) / 2, h = (l1 - l2) / 2;
  return {m + h * d.z, m - h * d.z, h * d.x, -h * d.y};
}

inline Complex2x2<double> invertible(SplitMix64& r) {
  Complex2x2<double> x;
  for (;;) {
    for (auto& e : x.m) {
      const auto [a, b] = r.normal_pair();
      e = {a, b};
    }
    if (std::abs(x.det()) > 1e-2) return x;
  }
}

}  // namespace gyroqubit::gen
