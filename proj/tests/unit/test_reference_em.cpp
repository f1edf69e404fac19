#include <cmath>
#include <limits>
#include <vector>

#include <gtest/gtest.h>

#include "models.hpp"
#include "pdifmp/error.hpp"
#include "pdifmp/hybrid.hpp"
#include "pdifmp/reference_em.hpp"
#include "pdifmp/stats.hpp"

using namespace pdifmp;

namespace {

PDifMPModel unit_drift_no_noise() {
  PDifMPModel m = testmodels::zero_drift(1.0, -1.0, -1.0, 1e-12);
  m.mu = [](double, double, double) { return 1.0; };
  m.sigma = [](double, double, double) { return 0.0; };
  return m;
}

std::vector<double> taus(const std::vector<FPTSample>& s) {
  std::vector<double> v;
  for (const auto& x : s) v.push_back(x.tau);
  return v;
}

}  // namespace

TEST(EulerMaruyama, DeterministicCrossing) {
  const PDifMPModel m = unit_drift_no_noise();
  for (double h : {1e-2, 1e-3}) {
    Rng rng = make_stream(1, 0, StreamDomain::test);
    const FPTSample s = simulate_em_fpt(m, 3.0, h, rng);
    EXPECT_FALSE(s.censored);
    EXPECT_NEAR(s.tau, 1.0, h);
  }
}

TEST(EulerMaruyama, DistantThresholdIsCensored) {
  const PDifMPModel m = testmodels::zero_drift(1e6, 0.0, 0.0, 1e-12);
  Rng rng = make_stream(2, 0, StreamDomain::test);
  const FPTSample s = simulate_em_fpt(m, 1.0, 1e-3, rng);
  EXPECT_TRUE(s.censored);
  EXPECT_EQ(s.tau, 1.0);
}

TEST(EulerMaruyama, CrossingTimesLieOnGridWithoutJumps) {
  const PDifMPModel m = testmodels::zero_drift(1.0, -1.0, 0.0, 1e-12);
  Rng rng = make_stream(3, 0, StreamDomain::test);
  const double h = 1e-2;
  for (int i = 0; i < 500; ++i) {
    const FPTSample s = simulate_em_fpt(m, 3.0, h, rng);
    ASSERT_LE(s.tau, 3.0);
    EXPECT_NEAR(s.tau / h, std::round(s.tau / h), 1e-6);
  }
}

TEST(EulerMaruyama, JumpCrossingHappensAtJumpTime) {
  PDifMPModel m = testmodels::zero_drift(1.0, -1.0, -1.0, 2.0);
  m.jump_size = [](double, double, double) { return 10.0; };
  Rng rng = make_stream(4, 0, StreamDomain::test);
  int by_jump = 0;
  for (int i = 0; i < 1000; ++i) {
    const FPTSample s = simulate_em_fpt(m, 3.0, 1e-2, rng);
    if (s.crossed_by_jump) {
      ++by_jump;
      EXPECT_EQ(s.jumps_before, 1u);
    }
  }
  EXPECT_GT(by_jump, 500);
}

TEST(EulerMaruyama, RejectsBadInput) {
  const PDifMPModel m = catalog_example1();
  Rng rng = make_stream(5, 0, StreamDomain::test);
  EXPECT_THROW(simulate_em_fpt(m, 3.0, 0.0, rng), ArgumentError);
  EXPECT_THROW(simulate_em_fpt(m, 3.0, -1e-3, rng), ArgumentError);

  PDifMPModel blowup = testmodels::zero_drift(1.0, -1.0, 0.0, 1e-12);
  blowup.mu = [](double, double, double) { return std::numeric_limits<double>::quiet_NaN(); };
  EXPECT_THROW(simulate_em_fpt(blowup, 3.0, 1e-3, rng), ModelError);
}

TEST(EulerMaruyama, BatchIsDeterministicAcrossWorkers) {
  const PDifMPModel m = catalog_example2();
  const auto a = run_em_batch(m, 3.0, 1e-3, 64, 11, 1);
  const auto b = run_em_batch(m, 3.0, 1e-3, 64, 11, 4);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].tau, b[i].tau);
    EXPECT_EQ(a[i].jumps_before, b[i].jumps_before);
  }
  EXPECT_THROW(run_em_batch(m, 3.0, 1e-3, 0, 11, 1), ArgumentError);
}

TEST(EulerMaruyama, CoarseStepOverestimatesAndDrifts) {
  const PDifMPModel m = catalog_example1();
  const auto exact = taus(run_batch(m, 3.0, {}, 3000, 21, 0));
  const auto coarse = taus(run_em_batch(m, 3.0, 1e-1, 3000, 21, 0));
  const auto fine = taus(run_em_batch(m, 3.0, 1e-3, 3000, 21, 0));
  EXPECT_GT(ks_two_sample(coarse, exact).d, ks_two_sample(fine, exact).d);
  EXPECT_GE(sample_mean(coarse), sample_mean(fine));
}
