#include <gtest/gtest.h>

#include <cmath>

#include "generators.hpp"
#include "gyroqubit/gyrovector.hpp"

using namespace gyroqubit;
using V = BlochVector<double>;

namespace {

void expect_vec(const V& a, const V& b, double tol) {
  EXPECT_NEAR(a.x, b.x, tol);
  EXPECT_NEAR(a.y, b.y, tol);
  EXPECT_NEAR(a.z, b.z, tol);
}

}  // namespace

TEST(Gamma, Values) {
  EXPECT_EQ(gamma(V{}), 1.0);
  EXPECT_NEAR(gamma(V{0.0, 0.0, 0.6}), 1.25, 1e-15);
  const V sum = einstein_add(V{0.5, 0, 0}, V{0, 0.5, 0});
  EXPECT_NEAR(sum.norm2(), 0.4375, 1e-15);
  EXPECT_NEAR(gamma(sum), 4.0 / 3.0, 1e-15);
}

TEST(Gamma, RejectsBoundary) {
  EXPECT_THROW(gamma(V{1.0, 0, 0}), BoundaryVector);
  EXPECT_THROW(gamma(V{0.6, 0.8, 0}), BoundaryVector);
}

TEST(EinsteinAdd, WorkedValues) {
  const V u{0.5, 0, 0}, v{0, 0.5, 0};
  expect_vec(einstein_add(V{}, v), v, 0.0);
  expect_vec(einstein_add(u, u), V{0.8, 0, 0}, 1e-15);
  expect_vec(einstein_add(u, v), V{0.5, 0.4330127, 0}, 1e-7);
  expect_vec(einstein_add(v, u), V{0.4330127, 0.5, 0}, 1e-7);
  EXPECT_NEAR(einstein_add(u, v).y, std::sqrt(0.1875), 1e-15);
}

TEST(EinsteinAdd, StaysInBall) {
  for (int i = 0; i < gen::kCases; ++i) {
    auto r = gen::stream("add_ball", i);
    const V a = gen::ball(r), b = gen::ball(r);
    EXPECT_LT(einstein_add(a, b).norm(), 1.0);
  }
}

TEST(EinsteinAddClosed, UnitLeftOperandAbsorbs) {
  expect_vec(einstein_add_closed(V{1, 0, 0}, V{0, 0.5, 0}), V{1, 0, 0}, 0.0);
  expect_vec(einstein_add_closed(V{1, 0, 0}, V{-1, 0, 0}), V{1, 0, 0}, 0.0);
  EXPECT_THROW(einstein_add_closed(V{1.1, 0, 0}, V{}), NormExceedsOne);
}

TEST(EinsteinAddClosed, MatchesInteriorAddition) {
  for (int i = 0; i < gen::kCases; ++i) {
    auto r = gen::stream("closed", i);
    const V a = gen::ball(r), b = gen::ball(r);
    expect_vec(einstein_add_closed(a, b), einstein_add(a, b), 1e-13);
  }
}

TEST(Gyration, IdentityWhenLeftIsZero) {
  const auto g = gyration(V{}, V{0.3, -0.2, 0.6});
  EXPECT_EQ(max_abs_diff(g, Rotation3<double>::identity()), 0.0);
}

TEST(Gyration, WorkedPair) {
  const V u{0.5, 0, 0}, v{0, 0.5, 0};
  const auto g = gyration(u, v);
  // rotation in the u-v plane by angle asin(1/7)
  EXPECT_NEAR(g.m[0][0], 0.989743318610787, 1e-14);
  EXPECT_NEAR(g.m[0][1], 1.0 / 7.0, 1e-14);
  EXPECT_NEAR(g.m[1][0], -1.0 / 7.0, 1e-14);
  expect_vec(g.apply(V{0, 0, 0.5}), V{0, 0, 0.5}, 1e-15);
  auto r = gen::stream("gyr_norm", 0);
  for (int i = 0; i < 100; ++i) {
    const V w = sample_direction(r);
    EXPECT_NEAR(g.apply(w).norm(), 1.0, 1e-14);
  }
}

TEST(Gyration, ThreeRoutesAgree) {
  for (int i = 0; i < gen::kCases; ++i) {
    auto r = gen::stream("gyr_routes", i);
    const V a = gen::ball(r, 0.9), b = gen::ball(r, 0.9);
    const auto g = gyration(a, b);
    EXPECT_LE(max_abs_diff(g, gyration_from_boosts(a, b)), 1e-10);
    EXPECT_LE(max_abs_diff(g, gyration_from_relation(a, b)), 1e-5);
  }
}

TEST(Gyration, DefiningRelation) {
  for (int i = 0; i < gen::kCases; ++i) {
    auto r = gen::stream("gyr_def", i);
    const V a = gen::ball(r), b = gen::ball(r), w = gen::ball(r);
    // gyr[a,b] w = -(a (+) b) (+) (a (+) (b (+) w))
    const V lhs = gyration(a, b).apply(w);
    const V rhs = einstein_add(-einstein_add(a, b), einstein_add(a, einstein_add(b, w)));
    EXPECT_LE((lhs - rhs).norm(), 1e-6);
  }
}

TEST(Gyration, OrthogonalWithUnitDeterminant) {
  for (int i = 0; i < gen::kCases; ++i) {
    auto r = gen::stream("gyr_orth", i);
    const auto g = gyration(gen::ball(r), gen::ball(r));
    EXPECT_LE(max_abs_diff(g.transpose() * g, Rotation3<double>::identity()), 1e-12);
    EXPECT_NEAR(g.det(), 1.0, 1e-12);
  }
}

TEST(ScalarMul, WorkedValues) {
  const V u{0.5, 0, 0};
  expect_vec(scalar_mul(1.0, u), u, 1e-16);
  expect_vec(scalar_mul(2.0, u), V{0.8, 0, 0}, 1e-15);
  expect_vec(scalar_mul(2.0, u), einstein_add(u, u), 1e-15);
  const V half = scalar_mul(0.5, V{0.8, 0, 0});
  expect_vec(half, u, 1e-15);
  expect_vec(einstein_add(half, half), V{0.8, 0, 0}, 1e-15);
  expect_vec(scalar_mul(3.0, V{}), V{}, 0.0);
}

TEST(ScalarMul, ScalesRapidity) {
  for (int i = 0; i < gen::kCases; ++i) {
    auto r = gen::stream("rapidity", i);
    const V u = gen::ball(r, 0.99);
    const double t = r.uniform(0.0, 3.0);
    EXPECT_NEAR(rapidity_of(scalar_mul(t, u)).phi, t * rapidity_of(u).phi, 1e-9 * std::max(1.0, t));
  }
}

TEST(Rapidity, Values) {
  EXPECT_EQ(rapidity_of(V{}).phi, 0.0);
  EXPECT_NEAR(rapidity_of(V{0, 0.6, 0}).phi, 0.6931472, 1e-7);
  EXPECT_NEAR(rapidity_of(V{0, 0.6, 0}).phi, std::log(2.0), 1e-15);
}

TEST(Boost, IdentityAtZero) {
  const auto b = lorentz_boost(V{});
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) EXPECT_EQ(b(i, j), i == j ? 1.0 : 0.0);
}

TEST(Boost, WorkedProduct) {
  const auto out = lorentz_boost(V{0.5, 0, 0}).apply({1.0, 0.0, 0.5, 0.0});
  EXPECT_NEAR(out[0], 1.1547005, 1e-7);
  EXPECT_NEAR(out[1], 0.5773503, 1e-7);
  EXPECT_NEAR(out[2], 0.5, 1e-15);
  EXPECT_NEAR(out[3], 0.0, 1e-15);
}

TEST(Boost, ExtractedSumMatchesAddition) {
  for (int i = 0; i < gen::kCases; ++i) {
    auto r = gen::stream("boost", i);
    const V a = gen::ball(r, 0.9), b = gen::ball(r, 0.9);
    expect_vec(boost_add(a, b).second, einstein_add(a, b), 1e-12);
  }
}

TEST(RestrictedAdd, Values) {
  EXPECT_EQ(restricted_add(0.0, 0.3), 0.3);
  EXPECT_NEAR(restricted_add(0.5, 0.5), 0.8, 1e-16);
  EXPECT_NEAR(restricted_add(std::tanh(0.5), std::tanh(1.0)), 0.9051483, 1e-7);
  EXPECT_NEAR(restricted_add(std::tanh(0.5), std::tanh(1.0)), std::tanh(1.5), 1e-15);
  EXPECT_THROW(restricted_add(1.0, 0.5), OutOfRange);
}
