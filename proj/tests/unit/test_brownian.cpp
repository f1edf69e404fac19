#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pdifmp/brownian.hpp"
#include "pdifmp/error.hpp"
#include "pdifmp/stats.hpp"

using namespace pdifmp;

namespace {

struct Moments {
  double mean = 0.0;
  double var = 0.0;
};

template <class Draw>
Moments moments(int n, Draw&& draw) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (auto& x : v) x = draw();
  return {sample_mean(v), sample_variance(v)};
}

}  // namespace

TEST(InverseGaussian, MeanAndVariance) {
  Rng rng = make_stream(1, 0, StreamDomain::test);
  const Moments m = moments(100000, [&] { return sample_inverse_gaussian(1.0, 1.0, rng); });
  EXPECT_NEAR(m.mean, 1.0, 0.02);
  EXPECT_NEAR(m.var, 1.0, 0.05);
}

TEST(InverseGaussian, ConcentratesForLargeShape) {
  Rng rng = make_stream(2, 0, StreamDomain::test);
  for (int i = 0; i < 10000; ++i) {
    const double x = sample_inverse_gaussian(1.0, 1e6, rng);
    ASSERT_GT(x, 0.99);
    ASSERT_LT(x, 1.01);
  }
}

TEST(InverseGaussian, RejectsNonPositiveParameters) {
  Rng rng = make_stream(2, 1, StreamDomain::test);
  EXPECT_THROW(sample_inverse_gaussian(0.0, 1.0, rng), ArgumentError);
  EXPECT_THROW(sample_inverse_gaussian(1.0, -1.0, rng), ArgumentError);
}

TEST(InverseGaussian, MatchesAnalyticCdf) {
  Rng rng = make_stream(3, 0, StreamDomain::test);
  std::vector<double> v(10000);
  for (auto& x : v) x = sample_inverse_gaussian(0.5, 2.0, rng);
  const KSResult ks =
      ks_one_sample(v, [](double t) { return oracle::inverse_gaussian_cdf(t, 0.5, 2.0); });
  EXPECT_GT(ks.p, 0.01);
}

TEST(FptToLine, StartOnLine) {
  Rng rng = make_stream(4, 0, StreamDomain::test);
  const HittingTime h = fpt_to_line({0.7, 0.0, -3.0}, rng);
  ASSERT_TRUE(h.is_finite());
  EXPECT_EQ(h.value(), 0.7);
}

TEST(FptToLine, FallingLineMean) {
  Rng rng = make_stream(5, 0, StreamDomain::test);
  double sum = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) sum += fpt_to_line({0.0, 1.0, -1.0}, rng).value();
  EXPECT_NEAR(sum / n, 1.0, 0.02);
}

TEST(FptToLine, RisingLineIsDefective) {
  Rng rng = make_stream(6, 0, StreamDomain::test);
  int finite = 0;
  const int n = 100000;
  std::vector<double> hits;
  for (int i = 0; i < n; ++i) {
    const HittingTime h = fpt_to_line({0.0, 1.0, 1.0}, rng);
    if (h.is_finite()) {
      ++finite;
      hits.push_back(h.value());
    }
  }
  EXPECT_NEAR(static_cast<double>(finite) / n, std::exp(-2.0), 0.01);
  // Conditional on finiteness the law is IG(a/b, a^2).
  const KSResult ks =
      ks_one_sample(hits, [](double t) { return oracle::inverse_gaussian_cdf(t, 1.0, 1.0); });
  EXPECT_GT(ks.p, 0.01);
}

TEST(FptToLine, FlatLineFollowsLevyLaw) {
  Rng rng = make_stream(7, 0, StreamDomain::test);
  std::vector<double> v(10000);
  for (auto& x : v) x = fpt_to_line({0.0, 1.5, 0.0}, rng).value();
  // P(T <= t) = 2 (1 - Phi(a / sqrt(t))).
  const KSResult ks = ks_one_sample(v, [](double t) {
    return t <= 0.0 ? 0.0 : 2.0 * (1.0 - oracle::normal_cdf(1.5 / std::sqrt(t)));
  });
  EXPECT_GT(ks.p, 0.01);
}

TEST(FptToLine, FallingLinePassesKsAgainstInverseGaussian) {
  Rng rng = make_stream(8, 0, StreamDomain::test);
  std::vector<double> v(10000);
  for (auto& x : v) x = fpt_to_line({2.0, 1.5, -0.8}, rng).value() - 2.0;
  const KSResult ks = ks_one_sample(
      v, [](double t) { return oracle::inverse_gaussian_cdf(t, 1.5 / 0.8, 1.5 * 1.5); });
  EXPECT_GT(ks.p, 0.01);
}

TEST(FptToLine, NegativeGapIsRejected) {
  Rng rng = make_stream(9, 0, StreamDomain::test);
  EXPECT_THROW(fpt_to_line({0.0, -0.1, -1.0}, rng), ArgumentError);
}

TEST(HittingTimeValue, InfinityIsExplicit) {
  const HittingTime h = HittingTime::never();
  EXPECT_FALSE(h.is_finite());
  EXPECT_FALSE(h.before(1e300));
  EXPECT_THROW(h.value(), ArgumentError);
  EXPECT_TRUE(HittingTime::at(1.0).before(1.5));
  EXPECT_FALSE(HittingTime::at(1.5).before(1.5));
}

TEST(BesselBridge, ZeroStateReturnsPinnedDistance) {
  Rng rng = make_stream(10, 0, StreamDomain::test);
  const BridgeSkeleton s = BridgeSkeleton::start(2.0, -0.75, -0.75);
  const BridgeStep step = bessel_bridge_point(s, 0.0, 3.0, rng);
  EXPECT_DOUBLE_EQ(step.xi, 3.0 - 0.75);
}

TEST(BesselBridge, NeverAboveThreshold) {
  Rng rng = make_stream(11, 0, StreamDomain::test);
  for (int rep = 0; rep < 2000; ++rep) {
    BridgeSkeleton s = BridgeSkeleton::start(1.5, 0.0, 0.8);
    for (double e = 0.1; e < 1.5; e += 0.1) {
      const BridgeStep step = bessel_bridge_point(s, e, 0.3, rng);
      ASSERT_LE(step.xi, 0.3);
      ASSERT_GE(step.gap, 0.0);
      s = step.skeleton;
    }
  }
}

TEST(BesselBridge, HitsPinsAtBothEnds) {
  Rng rng = make_stream(12, 0, StreamDomain::test);
  BridgeSkeleton s = BridgeSkeleton::start(1.0, 0.4, 1.1);
  s = bessel_bridge_point(s, 0.5, 0.0, rng).skeleton;
  const BridgeStep end = bessel_bridge_point(s, 1.0, 0.0, rng);
  EXPECT_NEAR(end.gap, 1.1, 1e-12);
}

TEST(BesselBridge, OutOfRangeElapsedIsRejected) {
  Rng rng = make_stream(13, 0, StreamDomain::test);
  BridgeSkeleton s = BridgeSkeleton::start(1.0, 0.0, 1.0);
  s = bessel_bridge_point(s, 0.6, 0.0, rng).skeleton;
  EXPECT_THROW(bessel_bridge_point(s, 0.5, 0.0, rng), ArgumentError);
  EXPECT_THROW(bessel_bridge_point(s, 1.2, 0.0, rng), ArgumentError);
}

TEST(BesselBridge, CoordinateVarianceMatchesBrownianBridge) {
  Rng rng = make_stream(14, 0, StreamDomain::test);
  const double total = 2.0;
  const double e = 0.5;
  const int n = 100000;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const BridgeSkeleton s = BridgeSkeleton::start(total, 0.0, 0.0);
    const double c = bessel_bridge_point(s, e, 0.0, rng).skeleton.l[1];
    sum += c;
    sum_sq += c * c;
  }
  const double var = sum_sq / n - (sum / n) * (sum / n);
  const double expected = e * (total - e) / total;
  // Standard error of a normal sample variance is var sqrt(2 / n).
  EXPECT_NEAR(var, expected, 3.0 * expected * std::sqrt(2.0 / n));
}

TEST(BesselBridge, RefinementPreservesTwoPointCovariance) {
  // Reaching e2 through an intermediate point must give the same joint law of
  // (l(e1), l(e2)) as the covariance e1 (L - e2) / L of a Brownian bridge.
  Rng rng = make_stream(15, 0, StreamDomain::test);
  const double total = 1.0;
  const double e1 = 0.3;
  const double e2 = 0.7;
  const int n = 100000;
  double s12 = 0.0;
  double s1 = 0.0;
  double s2 = 0.0;
  for (int i = 0; i < n; ++i) {
    BridgeSkeleton s = BridgeSkeleton::start(total, 0.0, 0.0);
    s = bessel_bridge_point(s, e1, 0.0, rng).skeleton;
    const double a = s.l[2];
    s = bessel_bridge_point(s, 0.5, 0.0, rng).skeleton;
    s = bessel_bridge_point(s, e2, 0.0, rng).skeleton;
    const double b = s.l[2];
    s12 += a * b;
    s1 += a;
    s2 += b;
  }
  const double cov = s12 / n - (s1 / n) * (s2 / n);
  const double expected = e1 * (total - e2) / total;
  EXPECT_NEAR(cov, expected, 0.003);
}
