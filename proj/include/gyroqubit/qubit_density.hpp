#pragma once

// Qubit density matrices parameterized by Bloch vectors, and the gyrogroup
// operation obtained by normalized congruence with the square root.

#include <array>
#include <cmath>
#include <concepts>
#include <string>

#include "gyroqubit/errors.hpp"
#include "gyroqubit/gyrovector.hpp"
#include "gyroqubit/hermitian2.hpp"

namespace gyroqubit {

/// The Pauli matrices sigma_x, sigma_y, sigma_z.
template <std::floating_point T>
struct Pauli {
  static constexpr Hermitian2<T> x{T(0), T(0), T(1), T(0)};
  static constexpr Hermitian2<T> y{T(0), T(0), T(0), T(-1)};
  static constexpr Hermitian2<T> z{T(1), T(-1), T(0), T(0)};
  static constexpr std::array<Hermitian2<T>, 3> all{x, y, z};
};

/// Qubit state stored by its Bloch vector. The matrix view
///
///   rho_v = 1/2 [ 1 + z    x - iy ]
///               [ x + iy   1 - z  ]
///
/// is derived on demand, so trace one and Hermiticity are exact.
template <std::floating_point T>
struct DensityMatrix {
  BlochVector<T> bloch{};

  static DensityMatrix maximally_mixed() { return {}; }

  Hermitian2<T> matrix() const {
    return {(T(1) + bloch.z) / T(2), (T(1) - bloch.z) / T(2), bloch.x / T(2), -bloch.y / T(2)};
  }

  /// Invertible iff the Bloch vector is in the open ball.
  bool is_mixed() const { return is_interior(bloch); }

  friend bool operator==(const DensityMatrix&, const DensityMatrix&) = default;
};

template <std::floating_point T>
DensityMatrix<T> from_bloch(const BlochVector<T>& v) {
  if (v.norm() > T(1) + kBoundaryGap<T>) {
    throw NormExceedsOne("Bloch vector norm " + std::to_string(static_cast<double>(v.norm())) + " exceeds 1");
  }
  return {v};
}

/// Inverts rho = (I + v.sigma)/2 via v_k = tr(rho sigma_k).
template <std::floating_point T>
BlochVector<T> to_bloch(const Hermitian2<T>& rho) {
  if (!(std::abs(rho.trace() - T(1)) <= T(1e-12))) {
    throw NotTraceOne("trace is " + std::to_string(static_cast<double>(rho.trace())) + ", expected 1");
  }
  if (eig_h2(rho).lambda2 < T(-1e-12)) {
    throw NotPositive("matrix has a negative eigenvalue");
  }
  return {T(2) * rho.re12, T(-2) * rho.im12, rho.a11 - rho.a22};
}

template <std::floating_point T>
struct DensitySpectrum {
  T lambda_plus{};
  T lambda_minus{};
  T det{};
};

/// Eigenvalues (1 +- |v|)/2 and determinant (1 - |v|^2)/4.
template <std::floating_point T>
DensitySpectrum<T> spectrum(const DensityMatrix<T>& rho) {
  const T n = rho.bloch.norm();
  return {(T(1) + n) / T(2), (T(1) - n) / T(2), (T(1) - n) * (T(1) + n) / T(4)};
}

/// Principal square root sqrt(g/(1+g)) (rho + I/(2g)), g the Lorentz factor
/// of the Bloch vector.
template <std::floating_point T>
Hermitian2<T> sqrt_density(const DensityMatrix<T>& rho) {
  const T g = gamma(rho.bloch);
  const T c = std::sqrt(g / (T(1) + g));
  return c * (rho.matrix() + (T(1) / (T(2) * g)) * Hermitian2<T>::identity());
}

/// rho_u (.) rho_v = S rho_v S / tr(S rho_v S), S = rho_u^{1/2}.
///
/// Evaluated in matrix form; the Bloch vector of the result is read back from
/// the normalized product.
template <std::floating_point T>
DensityMatrix<T> odot(const DensityMatrix<T>& rho_u, const DensityMatrix<T>& rho_v) {
  require_interior(rho_u.bloch, "left state");
  require_interior(rho_v.bloch, "right state");
  const auto product = congruence(sqrt_density(rho_u), rho_v.matrix());
  return {to_bloch((T(1) / product.trace()) * product)};
}

/// tr(rho_u rho_v) = (1 + u.v)/2.
template <std::floating_point T>
T trace_product(const DensityMatrix<T>& rho_u, const DensityMatrix<T>& rho_v) {
  return (T(1) + rho_u.bloch.dot(rho_v.bloch)) / T(2);
}

/// Gyrogroup inverse rho_{-u}.
template <std::floating_point T>
DensityMatrix<T> inverse_state(const DensityMatrix<T>& rho) {
  require_interior(rho.bloch);
  return {-rho.bloch};
}

enum class InverseFormula {
  Corrected,  ///< det(rho) rho^{-1} = rho^{-1} / (4 gamma^2)
  Printed,    ///< rho^{-1} / (4 gamma); trace equals gamma, not a state
};

/// coefficient * rho^{-1} with the coefficient chosen by `formula`, computed
/// through the spectral inverse.
template <std::floating_point T>
Hermitian2<T> inverse_state_matrix(const DensityMatrix<T>& rho, InverseFormula formula = InverseFormula::Corrected) {
  const T g = gamma(rho.bloch);
  const T coeff = formula == InverseFormula::Corrected ? T(1) / (T(4) * g * g) : T(1) / (T(4) * g);
  return coeff * inverse(rho.matrix());
}

}  // namespace gyroqubit
