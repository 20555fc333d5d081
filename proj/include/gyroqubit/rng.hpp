#pragma once

// Deterministic sampling. The generator is SplitMix64 (Steele, Lea & Flood,
// 2014): 64-bit state, increment 0x9E3779B97F4A7C15, output mixer with
// multipliers 0xBF58476D1CE4E5B9 / 0x94D049BB133111EB and shifts 30/27/31.
// Reals are built from the top 53 bits; normals use Box-Muller.
//
// Trial streams are counter based: trial i of suite s under seed k starts
// from mix(mix(k ^ fnv1a(s)) + i * 0x9E3779B97F4A7C15), so a trial's inputs do
// not depend on how many trials run or on which thread runs them.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string_view>
#include <utility>

#include "gyroqubit/errors.hpp"
#include "gyroqubit/gyrovector.hpp"

namespace gyroqubit {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr SplitMix64 for_trial(std::uint64_t seed, std::string_view stream, std::uint64_t trial) {
    return SplitMix64(mix64(mix64(seed ^ fnv1a(stream)) + trial * kGolden));
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  constexpr result_type operator()() {
    state_ += kGolden;
    return mix64(state_);
  }

  std::uint64_t state() const { return state_; }

  /// Uniform on the open interval (0, 1).
  double uniform_open() { return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53; }

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * (static_cast<double>((*this)() >> 11) * 0x1.0p-53); }

  /// Standard normal pair (Box-Muller).
  std::pair<double, double> normal_pair() {
    const double r = std::sqrt(-2.0 * std::log(uniform_open()));
    const double a = 2.0 * std::numbers::pi * uniform_open();
    return {r * std::cos(a), r * std::sin(a)};
  }

 private:
  std::uint64_t state_;
};

/// Uniform direction: normalized triple of independent standard normals.
inline BlochVector<double> sample_direction(SplitMix64& rng) {
  for (;;) {
    const auto [a, b] = rng.normal_pair();
    const auto [c, unused] = rng.normal_pair();
    (void)unused;
    const BlochVector<double> d{a, b, c};
    const double n = d.norm();
    if (n > 1e-300) return (1.0 / n) * d;
  }
}

/// Uniform on the ball of radius `radius_cap` in (0, 1]: radius cap*U^{1/3}.
inline BlochVector<double> sample_ball(SplitMix64& rng, double radius_cap) {
  if (!(radius_cap > 0.0 && radius_cap <= 1.0)) {
    throw OutOfRange("radius_cap must lie in (0, 1]");
  }
  const auto dir = sample_direction(rng);
  return (radius_cap * std::cbrt(rng.uniform_open())) * dir;
}

/// Uniform direction with radius uniform on [0.99 cap, cap).
inline BlochVector<double> sample_shell(SplitMix64& rng, double radius_cap) {
  const auto dir = sample_direction(rng);
  return rng.uniform(0.99 * radius_cap, radius_cap) * dir;
}

/// Ball sample that falls in the near-boundary shell with probability
/// `boundary_fraction`.
inline BlochVector<double> sample_stratified(SplitMix64& rng, double radius_cap, double boundary_fraction) {
  if (rng.uniform(0.0, 1.0) < boundary_fraction) return sample_shell(rng, radius_cap);
  return sample_ball(rng, radius_cap);
}

}  // namespace gyroqubit
