#include "pdifmp/reference_em.hpp"

#include <cmath>
#include <limits>

#include "pdifmp/batch.hpp"
#include "pdifmp/error.hpp"

namespace pdifmp {

namespace {

void check_step(double h) {
  if (!(h > 0.0) || !std::isfinite(h)) throw ArgumentError("EM step must be positive");
}

}  // namespace

FPTSample simulate_em_fpt(const PDifMPModel& model, double horizon, double h, Rng& rng) {
  check_step(h);
  FPTSample out;
  HybridState state = model.initial;
  double segment_start = 0.0;
  double t = 0.0;
  std::size_t k = 0;
  double t_jump = sample_jump_waiting_time(model.jump_rate, rng);

  while (t < horizon) {
    const double grid_next = segment_start + static_cast<double>(k + 1) * h;
    double t_to = std::min(grid_next, horizon);
    const bool at_jump = t_jump <= t_to;
    if (at_jump) t_to = t_jump;

    const double dt = t_to - t;
    const double drift = model.mu(t, state.y, state.z);
    const double diffusion = model.sigma(t, state.y, state.z);
    state.y += drift * dt + diffusion * std::sqrt(dt) * standard_normal(rng);
    t = t_to;
    ++k;
    if (!std::isfinite(state.y)) throw ModelError("EM state became non-finite");
    if (state.y >= model.threshold.value(t)) {
      out.tau = t;
      return out;
    }

    if (at_jump) {
      state = apply_jump(model, t, state, uniform01(rng));
      ++out.jumps_before;
      if (!std::isfinite(state.y)) throw ModelError("EM state became non-finite after jump");
      if (state.y >= model.threshold.value(t)) {
        out.tau = t;
        out.crossed_by_jump = true;
        return out;
      }
      segment_start = t;
      k = 0;
      t_jump = t + sample_jump_waiting_time(model.jump_rate, rng);
    }
  }
  out.tau = horizon;
  out.censored = true;
  return out;
}

std::vector<FPTSample> run_em_batch(const PDifMPModel& model, double horizon, double h,
                                    std::size_t n, std::uint64_t seed, std::size_t workers) {
  if (n == 0) throw ArgumentError("batch size must be at least 1");
  check_step(h);
  validate_model(model, horizon);
  return run_indexed<FPTSample>(n, seed, workers, StreamDomain::euler_maruyama,
                                [&](Rng& rng) { return simulate_em_fpt(model, horizon, h, rng); });
}

}  // namespace pdifmp
