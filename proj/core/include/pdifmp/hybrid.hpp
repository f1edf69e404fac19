#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pdifmp/conditional.hpp"
#include "pdifmp/model.hpp"
#include "pdifmp/rng.hpp"
#include "pdifmp/transform.hpp"

namespace pdifmp {

// One simulated outcome of min(tau, T_f).
struct FPTSample {
  double tau = 0.0;
  bool censored = false;          // no crossing before T_f, tau == T_f
  std::size_t jumps_before = 0;   // jumps applied, including a crossing one
  bool crossed_by_jump = false;
};

inline constexpr std::size_t kMaxJumpsPerSample = 100'000;

double sample_jump_waiting_time(double lambda, Rng& rng);

// Exact FPT of the PDifMP censored at `horizon`, alternating exact diffusion
// passages with conditional jump-time values. Throws IterationLimit when a
// sample exceeds kMaxJumpsPerSample jumps.
FPTSample simulate_fpt(const PDifMPModel& model, double horizon, const ConditionalConfig& cfg,
                       const GirsanovBounds& bounds, Rng& rng);
FPTSample simulate_fpt(const PDifMPModel& model, double horizon, const ConditionalConfig& cfg,
                       Rng& rng);

// n exact samples; sample k uses make_stream(seed, k). Validates the model and
// computes bounds once.
std::vector<FPTSample> run_batch(const PDifMPModel& model, double horizon,
                                 const ConditionalConfig& cfg, std::size_t n,
                                 std::uint64_t seed, std::size_t workers);

}  // namespace pdifmp
