#pragma once

// Closed-form kernel for 2x2 complex Hermitian matrices: spectral
// decomposition, scalar matrix functions, congruence and Frobenius norm.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <concepts>
#include <string>

#include "gyroqubit/errors.hpp"

namespace gyroqubit {

namespace detail {

// Error-free transformations used by the compensated determinant.
template <std::floating_point T>
inline void two_prod(T a, T b, T& p, T& e) {
  p = a * b;
  e = std::fma(a, b, -p);
}

template <std::floating_point T>
inline void two_sum(T a, T b, T& s, T& e) {
  s = a + b;
  const T bb = s - a;
  e = (a - (s - bb)) + (b - bb);
}

// a*b - (c*c + d*d) with a few ulps of error relative to the result, even
// when the result is tiny compared with a*b.
template <std::floating_point T>
inline T det_compensated(T a, T b, T c, T d) {
  T p, e1, q, e2, r, e3, s, es;
  two_prod(a, b, p, e1);
  two_prod(c, c, q, e2);
  two_prod(d, d, r, e3);
  two_sum(q, r, s, es);
  return (p - s) + (e1 - e2 - e3 - es);
}

}  // namespace detail

/// 2x2 complex Hermitian matrix stored as four reals:
///
///     [ a11              re12 + i*im12 ]
///     [ re12 - i*im12    a22           ]
///
/// The lower off-diagonal entry is never stored, so Hermiticity holds by
/// construction.
template <std::floating_point T>
struct Hermitian2 {
  T a11{};
  T a22{};
  T re12{};
  T im12{};

  static constexpr Hermitian2 identity() { return {T(1), T(1), T(0), T(0)}; }
  static constexpr Hermitian2 diag(T d1, T d2) { return {d1, d2, T(0), T(0)}; }

  std::complex<T> a12() const { return {re12, im12}; }
  std::complex<T> a21() const { return {re12, -im12}; }

  T trace() const { return a11 + a22; }
  T det() const { return detail::det_compensated(a11, a22, re12, im12); }

  /// det(M) * M^{-1}; exact (sign flips and swaps only).
  Hermitian2 adjugate() const { return {a22, a11, -re12, -im12}; }

  template <std::floating_point U>
  Hermitian2<U> cast() const {
    return {U(a11), U(a22), U(re12), U(im12)};
  }

  friend Hermitian2 operator+(const Hermitian2& a, const Hermitian2& b) {
    return {a.a11 + b.a11, a.a22 + b.a22, a.re12 + b.re12, a.im12 + b.im12};
  }
  friend Hermitian2 operator-(const Hermitian2& a, const Hermitian2& b) {
    return {a.a11 - b.a11, a.a22 - b.a22, a.re12 - b.re12, a.im12 - b.im12};
  }
  friend Hermitian2 operator*(T k, const Hermitian2& a) {
    return {k * a.a11, k * a.a22, k * a.re12, k * a.im12};
  }
  friend bool operator==(const Hermitian2&, const Hermitian2&) = default;
};

/// Largest entrywise modulus of a - b.
template <std::floating_point T>
T max_abs_diff(const Hermitian2<T>& a, const Hermitian2<T>& b) {
  return std::max({std::abs(a.a11 - b.a11), std::abs(a.a22 - b.a22),
                   std::hypot(a.re12 - b.re12, a.im12 - b.im12)});
}

/// General 2x2 complex matrix, row-major. Used for congruence factors and
/// eigenvector frames.
template <std::floating_point T>
struct Complex2x2 {
  using C = std::complex<T>;
  std::array<C, 4> m{};

  C& operator()(int r, int c) { return m[2 * r + c]; }
  const C& operator()(int r, int c) const { return m[2 * r + c]; }

  static Complex2x2 identity() { return {{C(1), C(0), C(0), C(1)}}; }

  static Complex2x2 from(const Hermitian2<T>& h) {
    return {{C(h.a11), h.a12(), h.a21(), C(h.a22)}};
  }

  C det() const { return m[0] * m[3] - m[1] * m[2]; }

  Complex2x2 adjoint() const {
    return {{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])}};
  }

  Complex2x2 inverse() const {
    const C d = det();
    return {{m[3] / d, -m[1] / d, -m[2] / d, m[0] / d}};
  }

  T frobenius2() const {
    return std::norm(m[0]) + std::norm(m[1]) + std::norm(m[2]) + std::norm(m[3]);
  }

  /// (M + M*)/2 expressed as a Hermitian2.
  Hermitian2<T> hermitian_part() const {
    const C off = (m[1] + std::conj(m[2])) / T(2);
    return {m[0].real(), m[3].real(), off.real(), off.imag()};
  }

  friend Complex2x2 operator*(const Complex2x2& a, const Complex2x2& b) {
    return {{a.m[0] * b.m[0] + a.m[1] * b.m[2], a.m[0] * b.m[1] + a.m[1] * b.m[3],
             a.m[2] * b.m[0] + a.m[3] * b.m[2], a.m[2] * b.m[1] + a.m[3] * b.m[3]}};
  }

  C trace() const { return m[0] + m[3]; }
};

/// Eigen-decomposition of a Hermitian2: lambda1 >= lambda2, unitary frame
/// whose first column is the lambda1 eigenvector.
template <std::floating_point T>
struct Spectrum2 {
  T lambda1{};
  T lambda2{};
  Complex2x2<T> frame = Complex2x2<T>::identity();

  /// frame * diag(f1, f2) * frame^*
  Hermitian2<T> compose(T f1, T f2) const {
    const auto p = frame(0, 0);
    const auto q = frame(1, 0);
    const T pp = std::norm(p);
    const T qq = std::norm(q);
    const auto off = (f1 - f2) * p * std::conj(q);
    return {f1 * pp + f2 * qq, f1 * qq + f2 * pp, off.real(), off.imag()};
  }
};

/// Closed-form spectral decomposition.
///
/// The larger-magnitude eigenvalue comes from trace/2 +- hypot(...); the other
/// one is recovered as det/lambda so that nearly singular matrices keep full
/// relative accuracy in their small eigenvalue.
template <std::floating_point T>
Spectrum2<T> eig_h2(const Hermitian2<T>& M) {
  const T mean = (M.a11 + M.a22) / T(2);
  const T half_diff = (M.a11 - M.a22) / T(2);
  const T off = std::hypot(M.re12, M.im12);
  const T r = std::hypot(half_diff, off);

  Spectrum2<T> s;
  s.lambda1 = mean + r;
  s.lambda2 = mean - r;
  if (mean > T(0) && s.lambda1 > T(0)) {
    s.lambda2 = M.det() / s.lambda1;
  } else if (mean < T(0) && s.lambda2 < T(0)) {
    s.lambda1 = M.det() / s.lambda2;
  }

  if (r == T(0) || r <= T(1e-14) * std::abs(M.a11 + M.a22)) {
    return s;  // degenerate: identity frame
  }

  using C = std::complex<T>;
  C p, q;
  if (half_diff >= T(0)) {
    p = C(half_diff + r);
    q = std::conj(M.a12());
  } else {
    p = M.a12();
    q = C(r - half_diff);
  }
  const T n = std::hypot(std::abs(p), std::abs(q));
  p /= n;
  q /= n;
  s.frame = Complex2x2<T>{{p, -std::conj(q), q, std::conj(p)}};
  return s;
}

enum class ScalarFn { Sqrt, Log, Inverse, Power };

inline std::string to_string(ScalarFn f) {
  switch (f) {
    case ScalarFn::Sqrt: return "sqrt";
    case ScalarFn::Log: return "log";
    case ScalarFn::Inverse: return "inverse";
    case ScalarFn::Power: return "power";
  }
  return "?";
}

/// Applies a real scalar function to the eigenvalues of M.
///
/// Log, Inverse and non-integer Power need lambda2 > 1e-300. Sqrt accepts a
/// positive semidefinite M; eigenvalues within 1e-14*max(1,|lambda1|) below
/// zero are treated as zero.
template <std::floating_point T>
Hermitian2<T> matfun_h2(const Hermitian2<T>& M, ScalarFn fn, T exponent = T(1)) {
  const auto s = eig_h2(M);
  constexpr T kFloor = T(1e-300);

  auto require_positive = [&] {
    if (!(s.lambda2 > kFloor)) {
      throw NonPositiveSpectrum(to_string(fn) + " needs a positive definite matrix, min eigenvalue " +
                                std::to_string(static_cast<double>(s.lambda2)));
    }
  };

  T f1{}, f2{};
  switch (fn) {
    case ScalarFn::Sqrt: {
      const T slack = T(1e-14) * std::max(T(1), std::abs(s.lambda1));
      if (s.lambda2 < -slack) {
        throw NonPositiveSpectrum("sqrt needs a positive semidefinite matrix, min eigenvalue " +
                                  std::to_string(static_cast<double>(s.lambda2)));
      }
      f1 = std::sqrt(std::max(s.lambda1, T(0)));
      f2 = std::sqrt(std::max(s.lambda2, T(0)));
      break;
    }
    case ScalarFn::Log:
      require_positive();
      f1 = std::log(s.lambda1);
      f2 = std::log(s.lambda2);
      break;
    case ScalarFn::Inverse:
      require_positive();
      f1 = T(1) / s.lambda1;
      f2 = T(1) / s.lambda2;
      break;
    case ScalarFn::Power: {
      if (exponent == T(1)) return M;
      const bool integral = std::trunc(exponent) == exponent;
      if (!integral) {
        require_positive();
      } else if (exponent < T(0) &&
                 (std::abs(s.lambda1) <= kFloor || std::abs(s.lambda2) <= kFloor)) {
        throw NonPositiveSpectrum("negative integer power of a singular matrix");
      }
      f1 = std::pow(s.lambda1, exponent);
      f2 = std::pow(s.lambda2, exponent);
      break;
    }
  }
  return s.compose(f1, f2);
}

template <std::floating_point T>
Hermitian2<T> sqrtm(const Hermitian2<T>& M) { return matfun_h2(M, ScalarFn::Sqrt); }
template <std::floating_point T>
Hermitian2<T> logm(const Hermitian2<T>& M) { return matfun_h2(M, ScalarFn::Log); }
template <std::floating_point T>
Hermitian2<T> inverse(const Hermitian2<T>& M) { return matfun_h2(M, ScalarFn::Inverse); }
template <std::floating_point T>
Hermitian2<T> powm(const Hermitian2<T>& M, T t) { return matfun_h2(M, ScalarFn::Power, t); }

/// X * A * X^*. Throws SingularFactor when |det X| <= 1e-14 * ||X||_F^2.
template <std::floating_point T>
Hermitian2<T> congruence(const Complex2x2<T>& X, const Hermitian2<T>& A) {
  if (std::abs(X.det()) <= T(1e-14) * X.frobenius2()) {
    throw SingularFactor("congruence factor is singular");
  }
  return (X * Complex2x2<T>::from(A) * X.adjoint()).hermitian_part();
}

template <std::floating_point T>
Hermitian2<T> congruence(const Hermitian2<T>& X, const Hermitian2<T>& A) {
  return congruence(Complex2x2<T>::from(X), A);
}

template <std::floating_point T>
T frobenius_norm(const Hermitian2<T>& M) {
  return std::sqrt(M.a11 * M.a11 + M.a22 * M.a22 + T(2) * (M.re12 * M.re12 + M.im12 * M.im12));
}

/// tr(A B) from the explicit complex product.
template <std::floating_point T>
T trace_of_product(const Hermitian2<T>& A, const Hermitian2<T>& B) {
  return (Complex2x2<T>::from(A) * Complex2x2<T>::from(B)).trace().real();
}

}  // namespace gyroqubit
