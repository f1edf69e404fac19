#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pdifmp/hitting_time.hpp"
#include "pdifmp/rng.hpp"

namespace pdifmp {

using StateFunction = std::function<double(double t, double y, double z)>;
using TimeFunction = std::function<double(double t)>;

// u = (y, z): continuous value and discrete mode.
struct HybridState {
  double y = 0.0;
  double z = 0.0;
};

// Time-varying barrier in original coordinates.
class Threshold {
 public:
  enum class Kind { linear, custom };

  static Threshold linear(double intercept, double slope);
  // `derivative_infimum` must bound derivative(t) from below for all t >= 0.
  static Threshold custom(TimeFunction value, TimeFunction derivative,
                          double derivative_infimum);

  double value(double t) const;
  double derivative(double t) const;
  double derivative_infimum() const noexcept { return derivative_infimum_; }
  Kind kind() const noexcept { return kind_; }
  // Only meaningful for Kind::linear.
  double intercept() const noexcept { return intercept_; }
  double slope() const noexcept { return slope_; }

 private:
  Threshold() = default;

  Kind kind_ = Kind::linear;
  double intercept_ = 0.0;
  double slope_ = 0.0;
  double derivative_infimum_ = 0.0;
  TimeFunction value_;
  TimeFunction derivative_;
};

// Lamperti map and Girsanov functionals of the tracking diffusion, in the
// transformed coordinate x = F(t, y, z). Integration constants of F and A are
// fixed at y = 0 (x = 0).
struct GirsanovData {
  StateFunction lamperti;          // F(t, y, z)
  StateFunction lamperti_inverse;  // F^{-1}(t, x, z)
  StateFunction lamperti_dt;       // dF/dt(t, y, z); empty means zero
  // F(t, ., z) is affine with coefficients independent of t, so a linear
  // threshold stays linear after transformation.
  bool lamperti_affine = false;

  StateFunction drift;              // alpha(t, x, z)
  StateFunction drift_dx;           // d alpha / dx
  StateFunction antiderivative;     // A(t, x, z), dA/dx = alpha
  StateFunction antiderivative_dt;  // dA/dt

  // Optional closed forms; when empty the defining expressions are used.
  std::function<double(double t, double z)> gamma1_closed;
  StateFunction gamma2_closed;

  // Uniform bounds over t in [0, T_f], x <= beta(t) and every reachable mode.
  std::optional<double> kappa;   // >= gamma1 + gamma2
  std::optional<double> kappa2;  // >= gamma2
  std::optional<double> a_plus;  // >= A
  // Fall back to grid suprema when analytic bounds are missing.
  bool numeric_bounds = false;

  // Lower bound on the slope of the transformed threshold. Defaults to the
  // original threshold's derivative infimum, which is exact for F = identity.
  std::optional<double> threshold_slope_infimum;
};

// Draws tau* (absolute time) for a Brownian motion started at x_start at
// time t_start against the transformed threshold.
using CandidateSampler =
    std::function<HittingTime(double t_start, double x_start, double z, Rng& rng)>;

// psi(u, state): realizes the mode kernel from one uniform variate.
using KernelSampler = std::function<double(double u, const HybridState& state)>;

struct PDifMPModel {
  std::string name;
  StateFunction mu;     // drift of Y between jumps
  StateFunction sigma;  // diffusion coefficient of Y
  double jump_rate = 1.0;
  StateFunction jump_size;  // j(t, y, z), evaluated at the pre-jump state
  KernelSampler kernel_sampler;
  Threshold threshold = Threshold::linear(1.0, -1.0);
  HybridState initial;
  GirsanovData girsanov;
  CandidateSampler candidate_sampler;  // optional, for nonlinear thresholds
};

// Parameters the catalog models accept.
struct CatalogParams {
  double lambda = 1.0;
  double y0 = -1.0;
  double intercept = 1.0;
  double slope = -1.0;
};

// dY = (1.6 + sin Y) dt + dB, jump j = -z sin(y), z ~ Exp(1).
PDifMPModel catalog_example1(const CatalogParams& params = {});
// dY = (z + sin(t + Y)/2) dt + dB, jump j = (1 - y)/z, z ~ U(1.8, 3).
PDifMPModel catalog_example2(const CatalogParams& params = {});

std::vector<std::string> catalog_names();
// Throws ConfigError for unknown names.
PDifMPModel catalog_model(const std::string& name, const CatalogParams& params = {});

// (y + j(t, y, z), psi(u, state)). j sees the pre-jump mode.
HybridState apply_jump(const PDifMPModel& model, double t, const HybridState& state,
                       double u);

// Checks shared by every simulation method: start below the threshold, finite
// positive jump rate, required callables present, derivative infimum holds on a
// probe grid. Throws ModelError.
void validate_model(const PDifMPModel& model, double horizon);

// Additional checks for the exact method: sigma >= 1e-12 on a probe grid and
// Girsanov data present. Throws ModelError.
void validate_for_exact(const PDifMPModel& model, double horizon);

// Modes probed by validation and numeric bounds: the initial mode plus kernel
// draws at fixed quantiles.
std::vector<double> probe_modes(const PDifMPModel& model);

}  // namespace pdifmp
