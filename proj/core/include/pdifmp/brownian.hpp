#pragma once

#include <array>

#include "pdifmp/hitting_time.hpp"
#include "pdifmp/rng.hpp"

namespace pdifmp {

// One draw from IG(mean, shape) (Michael-Schucany-Haas transform with one
// rejection step). Throws ArgumentError unless mean, shape > 0.
double sample_inverse_gaussian(double mean, double shape, Rng& rng);

// The line gap + slope * (t - t0) seen by a driftless Brownian motion that
// sits at 0 relative to it at t0.
struct LineBarrier {
  double t0 = 0.0;
  double gap = 0.0;    // line minus path at t0, >= 0
  double slope = 0.0;  // slope of the line relative to the path
};

// First time the Brownian motion reaches the line, as an absolute time.
// slope < 0: finite, elapsed ~ IG(gap/|slope|, gap^2).
// slope > 0: finite with probability exp(-2 gap slope), then IG(gap/slope, gap^2).
// slope = 0: Levy law gap^2 / N^2.
// Throws ArgumentError for gap < 0.
HittingTime fpt_to_line(const LineBarrier& barrier, Rng& rng);

// 3D Brownian bridge state whose norm, offset along the first axis by the
// pinned mean, is a Bessel(3) bridge from pin_start (elapsed 0) to pin_end
// (elapsed total). Elapsed time runs in the bridge's own orientation.
struct BridgeSkeleton {
  std::array<double, 3> l{0.0, 0.0, 0.0};
  double e_prev = 0.0;
  double total = 0.0;
  double pin_start = 0.0;
  double pin_end = 0.0;

  static BridgeSkeleton start(double total, double pin_start, double pin_end);
  // Pinned first-axis mean at elapsed e.
  double pinned_mean(double e) const;
};

struct BridgeStep {
  BridgeSkeleton skeleton;
  double gap = 0.0;  // Bessel bridge value at e_next, >= 0
  double xi = 0.0;   // threshold_at - gap
};

// Advances the skeleton from e_prev to e_next with the exact Gaussian bridge
// transition and returns the path value xi = threshold_at - gap. Throws
// ArgumentError unless e_prev <= e_next <= total.
BridgeStep bessel_bridge_point(const BridgeSkeleton& skeleton, double e_next,
                               double threshold_at, Rng& rng);

}  // namespace pdifmp
