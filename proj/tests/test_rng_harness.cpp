#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "gyroqubit/harness.hpp"
#include "gyroqubit/rng.hpp"
#include "gyroqubit/suites.hpp"

using namespace gyroqubit;

TEST(SplitMix64, ReferenceSequence) {
  // Reference outputs for seed 1234567 from the published algorithm.
  SplitMix64 r(1234567);
  EXPECT_EQ(r(), 6457827717110365317ULL);
  EXPECT_EQ(r(), 3203168211198807973ULL);
  EXPECT_EQ(r(), 9817491932198370423ULL);
  EXPECT_EQ(r(), 4593380528125082431ULL);
  EXPECT_EQ(r(), 16408922859458223821ULL);
}

TEST(SplitMix64, TrialStreamsAreIndependentOfOrder) {
  auto a = SplitMix64::for_trial(42, "axioms", 7);
  for (int i = 0; i < 3; ++i) SplitMix64::for_trial(42, "axioms", i)();
  auto b = SplitMix64::for_trial(42, "axioms", 7);
  EXPECT_EQ(a(), b());
  EXPECT_NE(SplitMix64::for_trial(42, "axioms", 7)(), SplitMix64::for_trial(42, "bounds", 7)());
  EXPECT_NE(SplitMix64::for_trial(42, "axioms", 7)(), SplitMix64::for_trial(43, "axioms", 7)());
}

TEST(Sampling, FixedSeedIsReproducible) {
  SplitMix64 a(99), b(99);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(sample_ball(a, 0.999), sample_ball(b, 0.999));
}

TEST(Sampling, MeanNormAtUnitCap) {
  SplitMix64 r(42);
  double sum = 0.0;
  constexpr int n = 100000;
  for (int i = 0; i < n; ++i) {
    const auto v = sample_ball(r, 1.0);
    ASSERT_LE(v.norm(), 1.0);
    sum += v.norm();
  }
  EXPECT_NEAR(sum / n, 0.75, 0.003);
}

TEST(Sampling, ShellAndStratified) {
  SplitMix64 r(5);
  int shell = 0;
  constexpr int n = 20000;
  for (int i = 0; i < n; ++i) {
    const auto s = sample_shell(r, 0.999);
    EXPECT_GE(s.norm(), 0.99 * 0.999 - 1e-15);
    EXPECT_LT(s.norm(), 0.999 + 1e-15);
    if (sample_stratified(r, 0.5, 0.2).norm() >= 0.99 * 0.5) ++shell;
  }
  // P(shell) = 0.2 + 0.8 * (1 - 0.99^3)
  const double p = 0.2 + 0.8 * (1 - std::pow(0.99, 3));
  EXPECT_NEAR(double(shell) / n, p, 4 * std::sqrt(p * (1 - p) / n));
}

TEST(Sampling, RejectsBadCap) {
  SplitMix64 r(1);
  EXPECT_THROW(sample_ball(r, 0.0), OutOfRange);
  EXPECT_THROW(sample_ball(r, 1.5), OutOfRange);
}

TEST(Residual, Definitions) {
  EXPECT_EQ(residual(1.5, 1.0), 0.5);
  EXPECT_EQ(residual(300.0, 200.0), 0.5);
  EXPECT_EQ(excess(0.5, 1.0), 0.0);
  EXPECT_EQ(excess_abs(1.25, 1.0), 0.25);
  EXPECT_EQ(residual(std::nan(""), 1.0), std::numeric_limits<double>::max());
}

TEST(Harness, ReportIndependentOfThreadCount) {
  TrialConfig one;
  one.trials = 500;
  one.threads = 1;
  TrialConfig four = one;
  four.threads = 4;
  for (const auto& id : suite_ids()) {
    if (id == "pathlength") continue;
    EXPECT_EQ(to_json(run_suite(id, one)).dump(), to_json(run_suite(id, four)).dump()) << id;
  }
}

TEST(Harness, AxiomsPassAtDefaultConfig) {
  TrialConfig cfg;
  const auto r = run_suite("axioms", cfg);
  EXPECT_EQ(r.trials_run, 10000u);
  EXPECT_EQ(r.violations, 0u) << to_json(r).dump();
}

TEST(Harness, ErratumReportsBothTraces) {
  TrialConfig cfg;
  cfg.trials = 10;
  const auto r = run_suite("erratum", cfg);
  EXPECT_TRUE(r.passed());
  EXPECT_NEAR(r.notes.at("printed_trace").get<double>(), 1.25, 1e-12);
  EXPECT_NEAR(r.notes.at("corrected_trace").get<double>(), 1.0, 1e-12);
}

TEST(Harness, UnknownSuite) {
  EXPECT_THROW(run_suite("nonsense", TrialConfig{}), UnknownSuite);
}

TEST(Harness, ViolationsAreCountedAndWitnessed) {
  TrialConfig cfg;
  cfg.trials = 200;
  cfg.tol_rel = 1e-30;
  const auto r = run_suite("gamma_identity", cfg);
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.worst_witness.is_null());
  EXPECT_GT(r.max_residual, r.tolerance);
}

TEST(Harness, DomainErrorsInsideTrialsAreRecorded) {
  TrialConfig cfg;
  cfg.trials = 20;
  Suite s("throws", cfg);
  const auto c = s.check("never", 1.0);
  s.run(cfg.trials, [&](SplitMix64&, TrialScope& t) {
    if (t.trial() == 3) gamma(BlochVector<double>{1, 0, 0});
    t.record(c, 0.0);
  });
  const auto r = s.finish();
  EXPECT_EQ(r.violations, 1u);
  EXPECT_EQ(r.worst_check, "domain_errors");
}

TEST(Harness, ConfigValidation) {
  TrialConfig cfg;
  cfg.radius_cap = 1.0;
  EXPECT_THROW(cfg.validate(), OutOfRange);
  cfg = {};
  cfg.trials = 0;
  EXPECT_THROW(cfg.validate(), OutOfRange);
}

TEST(Harness, AllSuiteSummary) {
  TrialConfig cfg;
  cfg.trials = 50;
  const auto all = run_all(cfg);
  ASSERT_EQ(all.size(), suite_ids().size() + 1);
  EXPECT_EQ(all.back().suite_id, "all");
  std::size_t trials = 0;
  for (std::size_t i = 0; i + 1 < all.size(); ++i) trials += all[i].trials_run;
  EXPECT_EQ(all.back().trials_run, trials);
  EXPECT_TRUE(all.back().passed());
}
