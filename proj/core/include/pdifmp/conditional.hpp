#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pdifmp/model.hpp"
#include "pdifmp/rng.hpp"
#include "pdifmp/transform.hpp"

namespace pdifmp {

struct ConditionalConfig {
  std::optional<double> s_init;  // defaults to (slope infimum - 1)
  double s_min = -10.0;
  double s_decrement = 1.0;
  double epsilon = 1e-3;
  std::size_t max_barriers = 1'000'000;
  std::size_t max_attempts = 1'000'000;
};

// Checks the config against the model and returns the initial slope. Throws
// ArgumentError when s_init >= slope infimum, s_min > s_init,
// s_decrement <= 0 or epsilon <= 0.
double resolve_initial_slope(const PDifMPModel& model, const ConditionalConfig& cfg);

struct TrackingPoint {
  double t = 0.0;
  double x = 0.0;
};

struct ConditionalPoint {
  double t_c = 0.0;
  double x_c = 0.0;  // barrier value at t_c, below beta(t_c)
  double slope_used = 0.0;
  std::size_t barriers_built = 0;
  std::size_t paths_drawn = 0;    // fresh first-barrier draws
  bool fixed_first_barrier = false;  // accepted through the s_min exit
  // (t_i, x_i) followed by every barrier hit of the accepted chain; the last
  // entry is (t_c, x_c).
  std::vector<TrackingPoint> track;
};

// A point (t_c, x_c), t_c >= t_next, of a Brownian path from (t_i, x_i) kept
// below the transformed threshold, found by chaining hitting times to lines of
// slope s below it. Throws IterationLimit after cfg.max_barriers line draws.
ConditionalPoint sample_conditional_point(const PDifMPModel& model, double t_i, double t_next,
                                          double x_i, double z, const ConditionalConfig& cfg,
                                          Rng& rng);

struct ConditionalValue {
  double x = 0.0;  // transformed value at t_next
  std::size_t attempts = 0;
  std::size_t barriers_built = 0;
  std::size_t thinning_points = 0;
};

// Transformed tracking value at t_next given no crossing on [t_i, t_next].
// Each attempt rebuilds the auxiliary path from a conditional point as one
// Bessel bridge per tracking segment, measured below that segment's line and
// pinned at its hit, then accepts it with the Girsanov weight on
// [t_i, t_next]: Poisson thinning of gamma2 at rate kappa2 and
// exp(A(t_next, x) - A+). Throws IterationLimit after cfg.max_attempts
// auxiliary paths.
ConditionalValue sample_value_at_jump(const PDifMPModel& model, const GirsanovBounds& bounds,
                                      double t_i, double t_next, double x_i, double z,
                                      const ConditionalConfig& cfg, Rng& rng);

}  // namespace pdifmp
