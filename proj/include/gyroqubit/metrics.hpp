#pragma once

// Distances: the gyrometric and rapidity metric on the ball, the trace
// (affine-invariant) metric on positive definite 2x2 matrices, and the
// path-length machinery behind the latter.

#include <cmath>
#include <concepts>
#include <functional>
#include <numbers>
#include <string>
#include <utility>

#include "gyroqubit/errors.hpp"
#include "gyroqubit/gyrovector.hpp"
#include "gyroqubit/hermitian2.hpp"
#include "gyroqubit/qubit_density.hpp"

namespace gyroqubit {

/// |(-u) (+) v|, in [0, 1). Exactly 0 for coincident points.
template <std::floating_point T>
T gyrometric(const BlochVector<T>& u, const BlochVector<T>& v) {
  if (u == v) {
    require_interior(u);
    return T(0);
  }
  return einstein_add(-u, v).norm();
}

/// atanh of the gyrometric; the Cayley-Klein distance of the Klein ball.
template <std::floating_point T>
T rapidity_metric(const BlochVector<T>& u, const BlochVector<T>& v) {
  return std::atanh(gyrometric(u, v));
}

template <std::floating_point T>
void require_positive_definite(const Hermitian2<T>& A, const char* what) {
  if (!(eig_h2(A).lambda2 > T(1e-300))) {
    throw NotPositiveDefinite(std::string(what) + " is not positive definite");
  }
}

/// Eigenvalues (mu1 >= mu2) of A^{-1/2} B A^{-1/2}. mu2 is taken from
/// det(B)/det(A) so it keeps its relative accuracy for ill-conditioned pairs.
template <std::floating_point T>
std::pair<T, T> relative_eigenvalues(const Hermitian2<T>& A, const Hermitian2<T>& B) {
  require_positive_definite(A, "first argument");
  require_positive_definite(B, "second argument");
  const auto c = congruence(powm(A, T(-0.5)), B);
  const T mu1 = eig_h2(c).lambda1;
  return {mu1, (B.det() / A.det()) / mu1};
}

/// delta(A, B) = || log(A^{-1/2} B A^{-1/2}) ||_F. Returns exactly 0 below 1e-12.
template <std::floating_point T>
T trace_metric(const Hermitian2<T>& A, const Hermitian2<T>& B) {
  const auto [mu1, mu2] = relative_eigenvalues(A, B);
  const T d = std::hypot(std::log(mu1), std::log(mu2));
  return d < T(1e-12) ? T(0) : d;
}

/// || log(A^{-1} B) ||_F from the characteristic polynomial of the
/// (non-Hermitian) product A^{-1} B: mu^2 - tr(A^{-1}B) mu + det(B)/det(A).
/// Shares no code path with trace_metric() beyond the determinant.
template <std::floating_point T>
T trace_metric_via_product(const Hermitian2<T>& A, const Hermitian2<T>& B) {
  require_positive_definite(A, "first argument");
  require_positive_definite(B, "second argument");
  const T det_a = A.det();
  // tr(adj(A) B) = a22 b11 + a11 b22 - 2 Re(a12 conj(b12))
  const T tr = (A.a22 * B.a11 + A.a11 * B.a22 - T(2) * (A.re12 * B.re12 + A.im12 * B.im12)) / det_a;
  const T prod = B.det() / det_a;
  const T disc = std::max(T(0), tr * tr - T(4) * prod);
  const T mu1 = (tr + std::sqrt(disc)) / T(2);
  const T mu2 = prod / mu1;
  return std::hypot(std::log(mu1), std::log(mu2));
}

/// Upper bound sqrt(ln^2(x/a) + ln^2(x/b)) on delta(rho_u, rho_v), with
/// x = tr(rho_{-u} rho_v) = (1 - u.v)/2, a = det rho_u, b = det rho_v.
template <std::floating_point T>
T prop_bound(const BlochVector<T>& u, const BlochVector<T>& v) {
  require_interior(u, "left operand");
  require_interior(v, "right operand");
  const T x = (T(1) - u.dot(v)) / T(2);
  const T a = spectrum(DensityMatrix<T>{u}).det;
  const T b = spectrum(DensityMatrix<T>{v}).det;
  return std::hypot(std::log(x / a), std::log(x / b));
}

/// Trace-metric geodesic t -> A^{1/2} (A^{-1/2} B A^{-1/2})^t A^{1/2}, with the
/// factorization computed once.
template <std::floating_point T>
class Geodesic {
 public:
  Geodesic(const Hermitian2<T>& A, const Hermitian2<T>& B) : a_(A), b_(B) {
    require_positive_definite(A, "first argument");
    require_positive_definite(B, "second argument");
    a_half_ = sqrtm(A);
    inner_ = eig_h2(congruence(powm(A, T(-0.5)), B));
  }

  /// Endpoints are returned exactly.
  Hermitian2<T> at(T t) const {
    if (t == T(0)) return a_;
    if (t == T(1)) return b_;
    return congruence(a_half_, inner_.compose(std::pow(inner_.lambda1, t), std::pow(inner_.lambda2, t)));
  }

 private:
  Hermitian2<T> a_, b_, a_half_;
  Spectrum2<T> inner_;
};

template <std::floating_point T>
Hermitian2<T> geodesic_point(const Hermitian2<T>& A, const Hermitian2<T>& B, T t) {
  return Geodesic<T>(A, B).at(t);
}

/// A parameterized path [0,1] -> positive definite matrices.
template <std::floating_point T>
struct PathSampler {
  Hermitian2<T> endpoint_a{};
  Hermitian2<T> endpoint_b{};
  std::function<Hermitian2<T>(T)> rule;
  int segments = 1024;

  Hermitian2<T> operator()(T t) const { return rule(t); }

  static PathSampler constant(const Hermitian2<T>& A, int n = 1024) {
    return {A, A, [A](T) { return A; }, n};
  }

  static PathSampler geodesic(const Hermitian2<T>& A, const Hermitian2<T>& B, int n = 1024) {
    return {A, B, [g = Geodesic<T>(A, B)](T t) { return g.at(t); }, n};
  }

  /// Geodesic plus amplitude*sin(pi t) added to the real part of the
  /// off-diagonal entry, re-projected into the cone by flooring eigenvalues
  /// at 1e-6.
  static PathSampler perturbed(const Hermitian2<T>& A, const Hermitian2<T>& B, int n = 1024,
                               T amplitude = T(0.05)) {
    auto rule = [g = Geodesic<T>(A, B), amplitude](T t) {
      auto p = g.at(t);
      if (t == T(0) || t == T(1)) return p;
      p.re12 += amplitude * std::sin(std::numbers::pi_v<T> * t);
      const auto s = eig_h2(p);
      constexpr T kFloor = T(1e-6);
      if (s.lambda2 >= kFloor) return p;
      return s.compose(std::max(s.lambda1, kFloor), kFloor);
    };
    return {A, B, rule, n};
  }
};

/// Midpoint-rule length of the path, integrand
/// || g^{-1/2} g' g^{-1/2} ||_F with g' by central differences.
template <std::floating_point T>
T path_length(const PathSampler<T>& path) {
  if (path.segments <= 0) throw OutOfRange("path needs at least one segment");
  const T h = T(1) / T(path.segments);
  const T eta = std::min(T(1e-5), h / T(4));
  T total{};
  for (int k = 0; k < path.segments; ++k) {
    const T t = (T(k) + T(0.5)) * h;
    const auto g = path(t);
    if (!(eig_h2(g).lambda2 > T(1e-300))) {
      throw NotPositiveDefinite("path leaves the positive definite cone at t = " +
                                std::to_string(static_cast<double>(t)));
    }
    const auto deriv = (T(1) / (T(2) * eta)) * (path(t + eta) - path(t - eta));
    total += frobenius_norm(congruence(powm(g, T(-0.5)), deriv));
  }
  return total * h;
}

}  // namespace gyroqubit
