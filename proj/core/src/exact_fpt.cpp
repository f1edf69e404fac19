#include "pdifmp/exact_fpt.hpp"

#include <cmath>
#include <string>

#include "pdifmp/brownian.hpp"
#include "pdifmp/error.hpp"

namespace pdifmp {

HittingTime sample_candidate_fpt(const PDifMPModel& model, double t_start, double x_start,
                                 double z, Rng& rng) {
  if (model.candidate_sampler) return model.candidate_sampler(t_start, x_start, z, rng);
  if (model.threshold.kind() != Threshold::Kind::linear || !model.girsanov.lamperti_affine) {
    throw UnsupportedThreshold(
        "candidate sampling needs a linear transformed threshold or a candidate sampler");
  }
  const double gap = transformed_threshold(model, t_start, z) - x_start;
  if (gap < 0.0) throw ArgumentError("candidate FPT requested from above the threshold");
  const double slope = transformed_threshold_slope(model, t_start, z);
  return fpt_to_line({t_start, gap, slope}, rng);
}

ThinningOutcome thin_candidate(const PDifMPModel& model, double kappa, double t_start,
                               double x_start, double z, double tau_star, Rng& rng,
                               const SkeletonObserver& observer) {
  ThinningOutcome out;
  const double length = tau_star - t_start;
  if (kappa <= 0.0 || length <= 0.0) return out;

  // Elapsed time e runs backwards from tau_star, where the gap is 0, to
  // t_start, where it equals the initial distance to the threshold.
  const double start_gap = transformed_threshold(model, t_start, z) - x_start;
  BridgeSkeleton skeleton = BridgeSkeleton::start(length, 0.0, start_gap);
  double e = exponential(kappa, rng);
  while (e <= length) {
    const double t = tau_star - e;
    const double beta = transformed_threshold(model, t, z);
    const BridgeStep step = bessel_bridge_point(skeleton, e, beta, rng);
    skeleton = step.skeleton;
    ++out.points;
    if (observer) observer({t, step.xi, beta});
    const double rate = gamma1(model, t, z) + gamma2(model, t, step.xi, z);
    if (rate > kappa * (1.0 + 1e-12)) {
      throw AssumptionViolation("gamma1 + gamma2 = " + std::to_string(rate) +
                                " exceeds kappa = " + std::to_string(kappa));
    }
    const double u = uniform01(rng);
    if (kappa * u <= rate) {
      out.accepted = false;
      return out;
    }
    e += exponential(kappa, rng);
  }
  return out;
}

ContinuousFPTResult simulate_fpt_continuous(const PDifMPModel& model,
                                            const GirsanovBounds& bounds, double t_start,
                                            double x_start, double z, Rng& rng,
                                            const SkeletonObserver& observer,
                                            std::size_t max_candidates) {
  if (!(x_start <= transformed_threshold(model, t_start, z))) {
    throw ArgumentError("continuous FPT requested from above the threshold");
  }
  ContinuousFPTResult result;
  while (result.candidates_tried < max_candidates) {
    const HittingTime candidate = sample_candidate_fpt(model, t_start, x_start, z, rng);
    ++result.candidates_tried;
    if (!candidate.is_finite()) {
      result.tau = candidate;
      return result;
    }
    const ThinningOutcome thin = thin_candidate(model, bounds.kappa, t_start, x_start, z,
                                                candidate.value(), rng, observer);
    result.thinning_points_used += thin.points;
    if (thin.accepted) {
      result.tau = candidate;
      return result;
    }
  }
  throw IterationLimit("continuous FPT: no candidate accepted after " +
                       std::to_string(max_candidates) + " draws (check kappa)");
}

}  // namespace pdifmp
