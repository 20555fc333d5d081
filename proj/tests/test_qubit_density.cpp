#include <gtest/gtest.h>

#include <cmath>

#include "generators.hpp"
#include "gyroqubit/qubit_density.hpp"

using namespace gyroqubit;
using V = BlochVector<double>;
using H = Hermitian2<double>;
using D = DensityMatrix<double>;

TEST(FromBloch, Values) {
  EXPECT_EQ(from_bloch(V{}).matrix(), H::diag(0.5, 0.5));
  EXPECT_EQ(from_bloch(V{0, 0, 0.5}).matrix(), H::diag(0.75, 0.25));
  EXPECT_EQ(from_bloch(V{0.6, 0, 0}).matrix(), (H{0.5, 0.5, 0.3, 0.0}));
  EXPECT_EQ(from_bloch(V{0, 1, 0}).matrix(), (H{0.5, 0.5, 0.0, -0.5}));
  EXPECT_THROW(from_bloch(V{0.8, 0.8, 0}), NormExceedsOne);
}

TEST(FromBloch, PauliExpansion) {
  for (int i = 0; i < gen::kCases; ++i) {
    auto r = gen::stream("pauli", i);
    const V v = gen::ball(r, 1.0);
    H expected = 0.5 * H::identity();
    for (int k = 0; k < 3; ++k) expected = expected + (0.5 * v[k]) * Pauli<double>::all[k];
    EXPECT_LE(max_abs_diff(D{v}.matrix(), expected), 1e-16);
  }
}

TEST(ToBloch, Values) {
  const V zero = to_bloch(H::diag(0.5, 0.5));
  EXPECT_EQ(zero, V{});
  EXPECT_EQ(to_bloch(H::diag(0.75, 0.25)), (V{0, 0, 0.5}));
  EXPECT_THROW(to_bloch(H::diag(0.6, 0.6)), NotTraceOne);
  EXPECT_THROW(to_bloch(H::diag(1.5, -0.5)), NotPositive);
}

TEST(ToBloch, RoundTrip) {
  for (int i = 0; i < gen::kCases; ++i) {
    auto r = gen::stream("roundtrip", i);
    const V v = gen::ball(r, 1.0);
    EXPECT_LE((to_bloch(D{v}.matrix()) - v).norm(), 1e-15);
  }
}

TEST(Spectrum, Values) {
  const auto s0 = spectrum(D{});
  EXPECT_EQ(s0.lambda_plus, 0.5);
  EXPECT_EQ(s0.lambda_minus, 0.5);
  EXPECT_EQ(s0.det, 0.25);
  const auto s = spectrum(D{V{0.6, 0, 0}});
  EXPECT_NEAR(s.lambda_plus, 0.8, 1e-15);
  EXPECT_NEAR(s.lambda_minus, 0.2, 1e-15);
  EXPECT_NEAR(s.det, 0.16, 1e-15);
}

TEST(Spectrum, MatchesEigensolverAndGamma) {
  for (int i = 0; i < gen::kCases; ++i) {
    auto r = gen::stream("spectrum", i);
    const D rho{gen::ball(r)};
    const auto s = spectrum(rho);
    const auto e = eig_h2(rho.matrix());
    EXPECT_NEAR(s.lambda_plus, e.lambda1, 1e-13);
    EXPECT_NEAR(s.lambda_minus, e.lambda2, 1e-13);
    const double g = gamma(rho.bloch);
    EXPECT_NEAR(s.det * 4.0 * g * g, 1.0, 1e-9);
  }
}

TEST(SqrtDensity, Values) {
  const auto r0 = sqrt_density(D{});
  EXPECT_NEAR(r0.a11, 0.7071068, 1e-7);
  EXPECT_NEAR(r0.a22, 0.7071068, 1e-7);
  const auto r = sqrt_density(D{V{0, 0, 0.6}});
  EXPECT_NEAR(r.a11, 0.8944272, 1e-7);
  EXPECT_NEAR(r.a22, 0.4472136, 1e-7);
  // sqrt(5)/3 * diag(1.2, 0.6)
  EXPECT_NEAR(r.a11, std::sqrt(5.0) / 3.0 * 1.2, 1e-15);
  EXPECT_LE(max_abs_diff(r, sqrtm(H::diag(0.8, 0.2))), 1e-15);
  EXPECT_THROW(sqrt_density(D{V{1, 0, 0}}), BoundaryVector);
}

TEST(SqrtDensity, SquaresToState) {
  for (int i = 0; i < gen::kCases; ++i) {
    auto r = gen::stream("sqrt_density", i);
    const D rho{gen::ball(r)};
    const auto s = sqrt_density(rho);
    EXPECT_LE(max_abs_diff(congruence(s, H::identity()), rho.matrix()), 1e-13);
    EXPECT_LE(max_abs_diff(s, sqrtm(rho.matrix())), 1e-12);
  }
}

TEST(Odot, IdentityAndWorkedPair) {
  const D v{V{0.3, -0.4, 0.2}};
  EXPECT_LE((odot(D::maximally_mixed(), v).bloch - v.bloch).norm(), 1e-15);
  const auto p = odot(D{V{0.5, 0, 0}}, D{V{0, 0.5, 0}});
  EXPECT_NEAR(p.bloch.x, 0.5, 1e-7);
  EXPECT_NEAR(p.bloch.y, 0.4330127, 1e-7);
  EXPECT_NEAR(p.bloch.z, 0.0, 1e-15);
}

TEST(Odot, IsomorphicToEinsteinAddition) {
  for (int i = 0; i < gen::kCases; ++i) {
    auto r = gen::stream("iso", i);
    const V u = gen::ball(r), v = gen::ball(r);
    const auto p = odot(D{u}, D{v});
    EXPECT_LE(max_abs_diff(p.matrix(), D{einstein_add(u, v)}.matrix()), 1e-12);
  }
}

TEST(Odot, StarProductTrace) {
  for (int i = 0; i < gen::kCases; ++i) {
    auto r = gen::stream("star", i);
    const D u{gen::ball(r)}, v{gen::ball(r)};
    EXPECT_NEAR(congruence(sqrt_density(u), v.matrix()).trace(), trace_product(u, v), 1e-12);
  }
}

TEST(TraceProduct, Values) {
  EXPECT_DOUBLE_EQ(trace_product(D{V{0.6, 0, 0}}, D{V{0, 0.6, 0}}), 0.5);
  EXPECT_NEAR(trace_product(D{V{0.6, 0, 0}}, D{V{0.6, 0, 0}}), 0.68, 1e-15);
  for (int i = 0; i < gen::kCases; ++i) {
    auto r = gen::stream("trace_product", i);
    const D u{gen::ball(r)}, v{gen::ball(r)};
    EXPECT_NEAR(trace_product(u, v), trace_of_product(u.matrix(), v.matrix()), 1e-14);
    // tr(rho_{-u} rho_v) = (1 - u.v)/2
    EXPECT_NEAR(trace_product(inverse_state(u), v), (1.0 - u.bloch.dot(v.bloch)) / 2.0, 1e-15);
  }
}

TEST(InverseState, Values) {
  EXPECT_EQ(inverse_state(D{}).matrix(), H::diag(0.5, 0.5));
  const D rho{V{0, 0, 0.6}};
  const auto m = inverse_state_matrix(rho);
  EXPECT_NEAR(m.a11, 0.2, 1e-15);
  EXPECT_NEAR(m.a22, 0.8, 1e-15);
  EXPECT_LE(max_abs_diff(m, inverse_state(rho).matrix()), 1e-15);
  const auto printed = inverse_state_matrix(rho, InverseFormula::Printed);
  EXPECT_NEAR(printed.a11, 0.25, 1e-15);
  EXPECT_NEAR(printed.a22, 1.0, 1e-15);
  EXPECT_NEAR(printed.trace(), 1.25, 1e-12);
}

TEST(InverseState, GroupInverse) {
  for (int i = 0; i < gen::kCases; ++i) {
    auto r = gen::stream("inverse_state", i);
    const D rho{gen::ball(r)};
    const auto inv = inverse_state(rho);
    EXPECT_LE(max_abs_diff(odot(rho, inv).matrix(), H::diag(0.5, 0.5)), 1e-12);
    EXPECT_LE(max_abs_diff(inverse_state_matrix(rho), inv.matrix()), 1e-12);
  }
}
