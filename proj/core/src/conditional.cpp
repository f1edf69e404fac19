#include "pdifmp/conditional.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pdifmp/brownian.hpp"
#include "pdifmp/error.hpp"

namespace pdifmp {

double resolve_initial_slope(const PDifMPModel& model, const ConditionalConfig& cfg) {
  const double inf_slope = transformed_slope_infimum(model);
  const double s = cfg.s_init.value_or(inf_slope - 1.0);
  if (!(s < inf_slope)) {
    throw ArgumentError("initial slope " + std::to_string(s) +
                        " must lie strictly below the threshold slope infimum " +
                        std::to_string(inf_slope));
  }
  if (!(cfg.s_min <= s)) throw ArgumentError("s_min must not exceed the initial slope");
  if (!(cfg.s_decrement > 0.0)) throw ArgumentError("s_decrement must be positive");
  if (!(cfg.epsilon > 0.0)) throw ArgumentError("epsilon must be positive");
  return s;
}

ConditionalPoint sample_conditional_point(const PDifMPModel& model, double t_i, double t_next,
                                          double x_i, double z, const ConditionalConfig& cfg,
                                          Rng& rng) {
  if (!(t_next > t_i)) throw ArgumentError("conditional point needs t_next > t_i");
  const double beta_i = transformed_threshold(model, t_i, z);
  if (!(x_i < beta_i)) throw ArgumentError("conditional point requested from the threshold");
  double s = resolve_initial_slope(model, cfg);
  auto beta = [&](double t) { return transformed_threshold(model, t, z); };

  ConditionalPoint out;
  auto draw = [&](double t0, double gap) {
    if (++out.barriers_built > cfg.max_barriers) {
      throw IterationLimit("conditional point: exceeded " + std::to_string(cfg.max_barriers) +
                           " barrier draws");
    }
    // Lines of negative slope are always reached.
    return fpt_to_line({t0, gap, s}, rng).value();
  };

  for (;;) {
    ++out.paths_drawn;
    const double t1 = draw(t_i, beta_i - x_i);
    const double x1 = beta_i + s * (t1 - t_i);
    if (t1 >= t_next) {
      if (s > cfg.s_min) {
        s -= cfg.s_decrement;
        continue;
      }
      out.t_c = t1;
      out.x_c = x1;
      out.slope_used = s;
      out.fixed_first_barrier = true;
      out.track = {{t_i, x_i}, {t1, x1}};
      return out;
    }
    double d = beta(t1) - x1;
    if (!(d > cfg.epsilon)) continue;

    std::vector<TrackingPoint> track{{t_i, x_i}, {t1, x1}};
    double t_prev = t1;
    for (;;) {
      const double b_prev = beta(t_prev);
      const double tj = draw(t_prev, d);
      const double xj = b_prev + s * (tj - t_prev);
      track.push_back({tj, xj});
      d = beta(tj) - xj;
      if (tj >= t_next) {
        out.t_c = tj;
        out.x_c = xj;
        out.slope_used = s;
        out.track = std::move(track);
        return out;
      }
      if (!(d > cfg.epsilon)) break;
      t_prev = tj;
    }
  }
}

namespace {

// Walks the tracking segments forward in time, sampling the path at
// increasing times from per-segment Bessel bridges below the barrier lines.
class SegmentPath {
 public:
  SegmentPath(const PDifMPModel& model, const ConditionalPoint& cp, double z)
      : model_(model), cp_(cp), z_(z) {
    open(1);
  }

  double at(double t, Rng& rng) {
    while (k_ + 1 < cp_.track.size() && t > cp_.track[k_].t) open(k_ + 1);
    const double t0 = cp_.track[k_ - 1].t;
    const double line = transformed_threshold(model_, t0, z_) + cp_.slope_used * (t - t0);
    const double e = std::clamp(t - t0, skeleton_.e_prev, skeleton_.total);
    const BridgeStep step = bessel_bridge_point(skeleton_, e, line, rng);
    skeleton_ = step.skeleton;
    return step.xi;
  }

 private:
  void open(std::size_t k) {
    k_ = k;
    const TrackingPoint& from = cp_.track[k - 1];
    const double gap = transformed_threshold(model_, from.t, z_) - from.x;
    skeleton_ = BridgeSkeleton::start(cp_.track[k].t - from.t, gap, 0.0);
  }

  const PDifMPModel& model_;
  const ConditionalPoint& cp_;
  double z_;
  std::size_t k_ = 1;
  BridgeSkeleton skeleton_;
};

}  // namespace

ConditionalValue sample_value_at_jump(const PDifMPModel& model, const GirsanovBounds& bounds,
                                      double t_i, double t_next, double x_i, double z,
                                      const ConditionalConfig& cfg, Rng& rng) {
  ConditionalValue out;
  const double kappa2 = bounds.kappa2;
  while (out.attempts < cfg.max_attempts) {
    ++out.attempts;
    const ConditionalPoint cp = sample_conditional_point(model, t_i, t_next, x_i, z, cfg, rng);
    out.barriers_built += cp.barriers_built;
    SegmentPath path(model, cp, z);

    bool accepted = true;
    if (kappa2 > 0.0) {
      for (double t = t_i + exponential(kappa2, rng); t < t_next; t += exponential(kappa2, rng)) {
        ++out.thinning_points;
        const double g = gamma2(model, t, path.at(t, rng), z);
        if (g > kappa2 * (1.0 + 1e-12)) {
          throw AssumptionViolation("gamma2 = " + std::to_string(g) + " exceeds kappa2 = " +
                                    std::to_string(kappa2));
        }
        if (kappa2 * uniform01(rng) <= g) {
          accepted = false;
          break;
        }
      }
    }
    if (!accepted) continue;

    const double x = path.at(t_next, rng);
    const double a = model.girsanov.antiderivative(t_next, x, z);
    if (a > bounds.a_plus + 1e-9) {
      throw AssumptionViolation("A = " + std::to_string(a) + " exceeds A+ = " +
                                std::to_string(bounds.a_plus));
    }
    if (uniform01(rng) > std::exp(a - bounds.a_plus)) continue;
    out.x = x;
    return out;
  }
  throw IterationLimit("value at jump: no auxiliary path accepted in " +
                       std::to_string(cfg.max_attempts) + " attempts (" +
                       std::to_string(out.thinning_points) + " thinning points, " +
                       std::to_string(out.barriers_built) + " barrier draws)");
}

}  // namespace pdifmp
