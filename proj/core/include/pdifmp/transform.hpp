#pragma once

#include "pdifmp/model.hpp"

namespace pdifmp {

// Uniform bounds used by the thinning steps and the endpoint weights.
struct GirsanovBounds {
  double kappa = 0.0;   // sup (gamma1 + gamma2)
  double kappa2 = 0.0;  // sup gamma2
  double a_plus = 0.0;  // sup A
};

struct NumericBoundsOptions {
  int grid = 400;         // points per axis
  double depth = 10.0;    // x ranges over [beta(t) - depth, beta(t)]
  double safety = 1.1;    // suprema are inflated by this factor
};

// x = F(t, y, z). Throws DomainError when sigma(t, y, z) <= 0.
double lamperti_forward(const PDifMPModel& model, double t, double y, double z);
double lamperti_inverse(const PDifMPModel& model, double t, double x, double z);

// beta(t) = F(t, threshold(t), z).
double transformed_threshold(const PDifMPModel& model, double t, double z);
// beta'(t) = dF/dt + threshold'(t) / sigma at the threshold.
double transformed_threshold_slope(const PDifMPModel& model, double t, double z);
double transformed_slope_infimum(const PDifMPModel& model);

// gamma1(t, z) = -dA/dt(t, beta, z) - alpha(t, beta, z) beta'(t).
// Throws AssumptionViolation below -1e-12.
double gamma1(const PDifMPModel& model, double t, double z);
// gamma2(t, x, z) = dA/dt + (d alpha/dx + alpha^2) / 2.
double gamma2(const PDifMPModel& model, double t, double x, double z);

// Analytic bounds from the model, with grid suprema (times the safety factor)
// filling any that are missing when numeric fallback is enabled. Throws
// UnboundedFunctional when a bound cannot be established.
GirsanovBounds bounds(const PDifMPModel& model, double horizon,
                      const NumericBoundsOptions& options = {});

// Grid suprema over the pre-crossing region, uninflated.
GirsanovBounds grid_suprema(const PDifMPModel& model, double horizon,
                            const NumericBoundsOptions& options = {});

}  // namespace pdifmp
