#include "pdifmp/brownian.hpp"

#include <cmath>

#include "pdifmp/error.hpp"

namespace pdifmp {

double sample_inverse_gaussian(double mean, double shape, Rng& rng) {
  if (!(mean > 0.0) || !(shape > 0.0) || !std::isfinite(mean) || !std::isfinite(shape)) {
    throw ArgumentError("inverse Gaussian needs positive finite mean and shape");
  }
  const double nu = standard_normal(rng);
  const double w = mean * nu * nu / (2.0 * shape);
  // mean * (1 + w - sqrt(w^2 + 2w)), written without cancellation.
  const double x = mean / (1.0 + w + std::sqrt(w * w + 2.0 * w));
  const double u = uniform01(rng);
  return u <= mean / (mean + x) ? x : mean * mean / x;
}

HittingTime fpt_to_line(const LineBarrier& barrier, Rng& rng) {
  const double a = barrier.gap;
  const double b = barrier.slope;
  if (!(a >= 0.0)) throw ArgumentError("fpt_to_line: path already above the line");
  if (a == 0.0) return HittingTime::at(barrier.t0);
  if (b < 0.0) return HittingTime::at(barrier.t0 + sample_inverse_gaussian(a / -b, a * a, rng));
  if (b > 0.0) {
    if (uniform01(rng) >= std::exp(-2.0 * a * b)) return HittingTime::never();
    return HittingTime::at(barrier.t0 + sample_inverse_gaussian(a / b, a * a, rng));
  }
  double n = 0.0;
  while (n == 0.0) n = standard_normal(rng);
  return HittingTime::at(barrier.t0 + a * a / (n * n));
}

BridgeSkeleton BridgeSkeleton::start(double total, double pin_start, double pin_end) {
  if (!(total >= 0.0)) throw ArgumentError("bridge length must be non-negative");
  BridgeSkeleton s;
  s.total = total;
  s.pin_start = pin_start;
  s.pin_end = pin_end;
  return s;
}

double BridgeSkeleton::pinned_mean(double e) const {
  if (total <= 0.0) return pin_end;
  return pin_start * (total - e) / total + pin_end * e / total;
}

BridgeStep bessel_bridge_point(const BridgeSkeleton& skeleton, double e_next,
                               double threshold_at, Rng& rng) {
  if (!(e_next >= skeleton.e_prev) || e_next > skeleton.total) {
    throw ArgumentError("bessel_bridge_point: elapsed time outside [e_prev, total]");
  }
  BridgeStep step{skeleton, 0.0, 0.0};
  BridgeSkeleton& s = step.skeleton;
  const double remaining = s.total - s.e_prev;
  if (remaining > 0.0 && e_next > s.e_prev) {
    const double shrink = (s.total - e_next) / remaining;
    const double sd = std::sqrt((s.total - e_next) * (e_next - s.e_prev) / remaining);
    for (double& c : s.l) c = shrink * c + sd * standard_normal(rng);
  }
  s.e_prev = e_next;
  const double first = s.pinned_mean(e_next) + s.l[0];
  step.gap = std::sqrt(first * first + s.l[1] * s.l[1] + s.l[2] * s.l[2]);
  step.xi = threshold_at - step.gap;
  return step;
}

}  // namespace pdifmp
