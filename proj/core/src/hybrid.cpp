#include "pdifmp/hybrid.hpp"

#include <algorithm>
#include <cmath>

#include "pdifmp/batch.hpp"
#include "pdifmp/error.hpp"
#include "pdifmp/exact_fpt.hpp"

namespace pdifmp {

namespace {

constexpr double kTieTolerance = 1e-12;

}  // namespace

double sample_jump_waiting_time(double lambda, Rng& rng) {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw ArgumentError("jump rate must be positive and finite");
  return exponential(lambda, rng);
}

FPTSample simulate_fpt(const PDifMPModel& model, double horizon, const ConditionalConfig& cfg,
                       const GirsanovBounds& bounds, Rng& rng) {
  double t = 0.0;
  HybridState state = model.initial;
  double x = lamperti_forward(model, t, state.y, state.z);
  FPTSample out;

  for (;;) {
    const double t_next = t + sample_jump_waiting_time(model.jump_rate, rng);
    const ContinuousFPTResult passage =
        simulate_fpt_continuous(model, bounds, t, x, state.z, rng);
    const HittingTime& tau1 = passage.tau;

    if (tau1.before(std::min(t_next, horizon))) {
      out.tau = tau1.value();
      return out;
    }
    if (horizon <= t_next) {
      out.tau = horizon;
      out.censored = true;
      return out;
    }

    // No crossing on [t, t_next): place the path at t_next, then jump.
    double x_jump;
    if (tau1.is_finite() && std::abs(tau1.value() - t_next) <= kTieTolerance) {
      x_jump = transformed_threshold(model, t_next, state.z);
    } else {
      x_jump = sample_value_at_jump(model, bounds, t, t_next, x, state.z, cfg, rng).x;
    }
    const HybridState pre{lamperti_inverse(model, t_next, x_jump, state.z), state.z};
    state = apply_jump(model, t_next, pre, uniform01(rng));
    ++out.jumps_before;
    if (out.jumps_before > kMaxJumpsPerSample)
      throw IterationLimit("jump limit exceeded in one sample");

    x = lamperti_forward(model, t_next, state.y, state.z);
    if (!std::isfinite(x)) throw ModelError("non-finite state after jump");
    if (x >= transformed_threshold(model, t_next, state.z)) {
      out.tau = t_next;
      out.crossed_by_jump = true;
      return out;
    }
    t = t_next;
  }
}

FPTSample simulate_fpt(const PDifMPModel& model, double horizon, const ConditionalConfig& cfg,
                       Rng& rng) {
  validate_for_exact(model, horizon);
  return simulate_fpt(model, horizon, cfg, bounds(model, horizon), rng);
}

std::vector<FPTSample> run_batch(const PDifMPModel& model, double horizon,
                                 const ConditionalConfig& cfg, std::size_t n,
                                 std::uint64_t seed, std::size_t workers) {
  if (n == 0) throw ArgumentError("batch size must be at least 1");
  validate_for_exact(model, horizon);
  resolve_initial_slope(model, cfg);
  const GirsanovBounds b = bounds(model, horizon);
  return run_indexed<FPTSample>(n, seed, workers, StreamDomain::exact, [&](Rng& rng) {
    return simulate_fpt(model, horizon, cfg, b, rng);
  });
}

}  // namespace pdifmp
