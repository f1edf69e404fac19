#pragma once

#include <cstddef>
#include <functional>

#include "pdifmp/hitting_time.hpp"
#include "pdifmp/model.hpp"
#include "pdifmp/rng.hpp"
#include "pdifmp/transform.hpp"

namespace pdifmp {

struct ContinuousFPTResult {
  HittingTime tau = HittingTime::never();
  std::size_t candidates_tried = 0;
  std::size_t thinning_points_used = 0;
};

// A reconstructed path point inspected by a thinning step.
struct SkeletonPoint {
  double t = 0.0;
  double xi = 0.0;
  double threshold = 0.0;
};
using SkeletonObserver = std::function<void(const SkeletonPoint&)>;

struct ThinningOutcome {
  bool accepted = true;
  std::size_t points = 0;
};

inline constexpr std::size_t kMaxCandidateDraws = 1'000'000;

// tau* of a Brownian motion from x_start at t_start to the transformed
// threshold. Uses the model's candidate sampler when present, otherwise the
// closed-form line law (requires a linear threshold and an affine Lamperti
// map; throws UnsupportedThreshold otherwise).
HittingTime sample_candidate_fpt(const PDifMPModel& model, double t_start, double x_start,
                                 double z, Rng& rng);

// Poisson thinning of one finite candidate: points of rate `kappa` on
// [t_start, tau_star] are tested against gamma1 + gamma2 evaluated on a
// Bessel bridge pinned to hit the threshold at tau_star.
ThinningOutcome thin_candidate(const PDifMPModel& model, double kappa, double t_start,
                               double x_start, double z, double tau_star, Rng& rng,
                               const SkeletonObserver& observer = {});

// Exact first passage of the tracking diffusion to the transformed threshold:
// candidates are redrawn until one survives thinning. An infinite candidate is
// returned as is. Throws IterationLimit after `max_candidates` draws.
ContinuousFPTResult simulate_fpt_continuous(const PDifMPModel& model,
                                            const GirsanovBounds& bounds, double t_start,
                                            double x_start, double z, Rng& rng,
                                            const SkeletonObserver& observer = {},
                                            std::size_t max_candidates = kMaxCandidateDraws);

}  // namespace pdifmp
