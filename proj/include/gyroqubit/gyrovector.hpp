#pragma once

// Einstein gyrogroup on the open unit ball of R^3.

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>
#include <string>
#include <utility>

#include "gyroqubit/errors.hpp"

namespace gyroqubit {

/// Velocity in units of the speed of light. Carrier of the Einstein
/// gyrogroup when interior, of the extended addition on the closed ball.
template <std::floating_point T>
struct BlochVector {
  T x{};
  T y{};
  T z{};

  T dot(const BlochVector& o) const { return x * o.x + y * o.y + z * o.z; }
  T norm2() const { return dot(*this); }
  T norm() const { return std::hypot(x, y, z); }

  T operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

  BlochVector cross(const BlochVector& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }

  template <std::floating_point U>
  BlochVector<U> cast() const {
    return {U(x), U(y), U(z)};
  }

  friend BlochVector operator+(const BlochVector& a, const BlochVector& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend BlochVector operator-(const BlochVector& a, const BlochVector& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend BlochVector operator-(const BlochVector& a) { return {-a.x, -a.y, -a.z}; }
  friend BlochVector operator*(T k, const BlochVector& a) { return {k * a.x, k * a.y, k * a.z}; }
  friend bool operator==(const BlochVector&, const BlochVector&) = default;
};

/// Distance from the boundary below which gyrogroup operations refuse input.
template <std::floating_point T>
inline constexpr T kBoundaryGap = T(1e-12);

template <std::floating_point T>
bool is_interior(const BlochVector<T>& u) {
  return u.norm() <= T(1) - kBoundaryGap<T>;
}

template <std::floating_point T>
void require_interior(const BlochVector<T>& u, const char* what = "vector") {
  if (!is_interior(u)) {
    throw BoundaryVector(std::string(what) + " has norm " + std::to_string(static_cast<double>(u.norm())) +
                         ", outside the open ball (gap 1e-12)");
  }
}

/// Hyperbolic angle atanh(|u|).
template <std::floating_point T>
struct Rapidity {
  T phi{};
};

/// 3x3 real matrix; produced by gyration() as an orthogonal rotation.
template <std::floating_point T>
struct Rotation3 {
  std::array<std::array<T, 3>, 3> m{};

  static Rotation3 identity() {
    Rotation3 r;
    for (int i = 0; i < 3; ++i) r.m[i][i] = T(1);
    return r;
  }

  T operator()(int r, int c) const { return m[r][c]; }

  BlochVector<T> apply(const BlochVector<T>& v) const {
    return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
            m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
            m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
  }

  Rotation3 transpose() const {
    Rotation3 t;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) t.m[i][j] = m[j][i];
    return t;
  }

  T det() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  }

  friend Rotation3 operator*(const Rotation3& a, const Rotation3& b) {
    Rotation3 p;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) p.m[i][j] += a.m[i][k] * b.m[k][j];
    return p;
  }
};

template <std::floating_point T>
T max_abs_diff(const Rotation3<T>& a, const Rotation3<T>& b) {
  T worst{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) worst = std::max(worst, std::abs(a.m[i][j] - b.m[i][j]));
  return worst;
}

/// Symmetric 4x4 Lorentz boost, time row and column first.
template <std::floating_point T>
struct Boost4 {
  std::array<std::array<T, 4>, 4> m{};

  T operator()(int r, int c) const { return m[r][c]; }

  std::array<T, 4> apply(const std::array<T, 4>& v) const {
    std::array<T, 4> out{};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) out[i] += m[i][j] * v[j];
    return out;
  }

  friend Boost4 operator*(const Boost4& a, const Boost4& b) {
    Boost4 p;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) p.m[i][j] += a.m[i][k] * b.m[k][j];
    return p;
  }
};

/// Lorentz factor 1/sqrt(1 - |u|^2).
template <std::floating_point T>
T gamma(const BlochVector<T>& u) {
  require_interior(u);
  return T(1) / std::sqrt((T(1) - u.norm()) * (T(1) + u.norm()));
}

/// Einstein addition u (+) v.
template <std::floating_point T>
BlochVector<T> einstein_add(const BlochVector<T>& u, const BlochVector<T>& v) {
  require_interior(u, "left operand");
  require_interior(v, "right operand");
  const T gu = gamma(u);
  const T uv = u.dot(v);
  const T k = T(1) / (T(1) + uv);
  const T cu = T(1) + gu / (T(1) + gu) * uv;
  return {k * (cu * u.x + v.x / gu), k * (cu * u.y + v.y / gu), k * (cu * u.z + v.z / gu)};
}

/// Extended addition on the closed ball: a unit-norm left operand absorbs
/// everything; otherwise the alpha = 1/gamma form of the addition is used,
/// which stays finite for right operands on the sphere.
template <std::floating_point T>
BlochVector<T> einstein_add_closed(const BlochVector<T>& u, const BlochVector<T>& v) {
  for (const auto* w : {&u, &v}) {
    if (w->norm() > T(1) + kBoundaryGap<T>) {
      throw NormExceedsOne("operand lies outside the closed unit ball");
    }
  }
  const T nu = u.norm();
  if (nu >= T(1) - kBoundaryGap<T>) return u;
  const T alpha = std::sqrt((T(1) - nu) * (T(1) + nu));
  const T uv = u.dot(v);
  const T k = T(1) / (T(1) + uv);
  const T cu = T(1) + uv / (T(1) + alpha);
  return {k * (cu * u.x + alpha * v.x), k * (cu * u.y + alpha * v.y), k * (cu * u.z + alpha * v.z)};
}

/// Thomas gyration gyr[u,v] as a 3x3 matrix, from the closed form of the
/// Einstein gyroautomorphism:
///
///   gyr[u,v]w = w + (A u + B v) / D,   D = 1 + gamma_{u(+)v}
///
/// with A, B linear in (u.w, v.w). Agrees with gyration_from_relation() and
/// gyration_from_boosts(), and unlike those stays accurate to ~1e-13 near the
/// boundary.
template <std::floating_point T>
Rotation3<T> gyration(const BlochVector<T>& u, const BlochVector<T>& v) {
  require_interior(u, "left operand");
  require_interior(v, "right operand");
  const T gu = gamma(u);
  const T gv = gamma(v);
  const T uv = u.dot(v);
  const T d = T(1) + gu * gv * (T(1) + uv);

  // A = a_u (u.w) + a_v (v.w),  B = b_u (u.w) + b_v (v.w)
  const T gu2 = gu * gu;
  const T gv2 = gv * gv;
  const T a_u = -gu2 / (gu + T(1)) * (gv - T(1));
  const T a_v = gu * gv + T(2) * gu2 * gv2 / ((gu + T(1)) * (gv + T(1))) * uv;
  const T b_u = -gu * gv;
  const T b_v = -gv / (gv + T(1)) * (gu - T(1)) * gv;

  Rotation3<T> r = Rotation3<T>::identity();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      // column j is the image of e_j, so u.w = u[j], v.w = v[j]
      const T A = a_u * u[j] + a_v * v[j];
      const T B = b_u * u[j] + b_v * v[j];
      r.m[i][j] += (A * u[i] + B * v[i]) / d;
    }
  }
  return r;
}

/// Negation is the gyrogroup inverse.
template <std::floating_point T>
BlochVector<T> gyro_inverse(const BlochVector<T>& u) { return -u; }

/// Materializes gyr[u,v] by evaluating gyr[u,v]c = (-(u(+)v)) (+) (u (+) (v (+) c))
/// on the basis vectors scaled by `probe`. Loses accuracy like 1/(1-|u(+)v|)^2
/// near the boundary; kept as an independent cross-check.
template <std::floating_point T>
Rotation3<T> gyration_from_relation(const BlochVector<T>& u, const BlochVector<T>& v, T probe = T(1e-3)) {
  const auto uv = einstein_add(u, v);
  Rotation3<T> r;
  for (int j = 0; j < 3; ++j) {
    BlochVector<T> c{};
    (j == 0 ? c.x : (j == 1 ? c.y : c.z)) = probe;
    const auto img = einstein_add(-uv, einstein_add(u, einstein_add(v, c)));
    r.m[0][j] = img.x / probe;
    r.m[1][j] = img.y / probe;
    r.m[2][j] = img.z / probe;
  }
  return r;
}

/// Scalar multiplication tanh(t atanh|u|) u/|u|; zero for t = 0 or u = 0.
template <std::floating_point T>
BlochVector<T> scalar_mul(T t, const BlochVector<T>& u) {
  require_interior(u);
  const T n = u.norm();
  if (t == T(0) || n == T(0)) return {};
  return (std::tanh(t * std::atanh(n)) / n) * u;
}

template <std::floating_point T>
Rapidity<T> rapidity_of(const BlochVector<T>& u) {
  require_interior(u);
  return {std::atanh(u.norm())};
}

template <std::floating_point T>
Boost4<T> lorentz_boost(const BlochVector<T>& u) {
  const T g = gamma(u);
  const T c = g * g / (T(1) + g);
  Boost4<T> b;
  b.m[0][0] = g;
  for (int i = 0; i < 3; ++i) {
    b.m[0][i + 1] = g * u[i];
    b.m[i + 1][0] = g * u[i];
    for (int j = 0; j < 3; ++j) b.m[i + 1][j + 1] = (i == j ? T(1) : T(0)) + c * (u[i] * u[j]);
  }
  return b;
}

/// B(u) applied to (1; v): returns (t, u (+) v) with t = gamma_u (1 + u.v).
template <std::floating_point T>
std::pair<T, BlochVector<T>> boost_add(const BlochVector<T>& u, const BlochVector<T>& v) {
  require_interior(v, "right operand");
  const auto out = lorentz_boost(u).apply({T(1), v.x, v.y, v.z});
  return {out[0], {out[1] / out[0], out[2] / out[0], out[3] / out[0]}};
}

/// Thomas rotation from boost composition: B(-(u(+)v)) B(u) B(v) is a pure
/// rotation whose spatial block is gyr[u,v].
template <std::floating_point T>
Rotation3<T> gyration_from_boosts(const BlochVector<T>& u, const BlochVector<T>& v) {
  const auto p = lorentz_boost(-einstein_add(u, v)) * lorentz_boost(u) * lorentz_boost(v);
  Rotation3<T> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = p.m[i + 1][j + 1];
  return r;
}

/// Restricted (collinear) Einstein addition of scalars in (-1, 1).
template <std::floating_point T>
T restricted_add(T s, T t) {
  if (!(std::abs(s) < T(1)) || !(std::abs(t) < T(1))) {
    throw OutOfRange("restricted addition needs |s| < 1 and |t| < 1");
  }
  return (s + t) / (T(1) + s * t);
}

}  // namespace gyroqubit
