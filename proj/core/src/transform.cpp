#include "pdifmp/transform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "pdifmp/error.hpp"

namespace pdifmp {

namespace {

constexpr double kNegativeTolerance = 1e-12;

void require_positive_sigma(const PDifMPModel& model, double t, double y, double z) {
  const double s = model.sigma(t, y, z);
  if (!(s > 0.0)) {
    throw DomainError("sigma(" + std::to_string(t) + ", " + std::to_string(y) + ", " +
                      std::to_string(z) + ") = " + std::to_string(s) +
                      " is not positive; Lamperti map undefined");
  }
}

double checked_nonnegative(double v, const char* name, double t, double x) {
  if (std::isnan(v) || v < -kNegativeTolerance) {
    throw AssumptionViolation(std::string(name) + " = " + std::to_string(v) +
                              " is negative at t = " + std::to_string(t) +
                              ", x = " + std::to_string(x));
  }
  return v;
}

}  // namespace

double lamperti_forward(const PDifMPModel& model, double t, double y, double z) {
  require_positive_sigma(model, t, y, z);
  return model.girsanov.lamperti(t, y, z);
}

double lamperti_inverse(const PDifMPModel& model, double t, double x, double z) {
  const double y = model.girsanov.lamperti_inverse(t, x, z);
  require_positive_sigma(model, t, y, z);
  return y;
}

double transformed_threshold(const PDifMPModel& model, double t, double z) {
  return lamperti_forward(model, t, model.threshold.value(t), z);
}

double transformed_threshold_slope(const PDifMPModel& model, double t, double z) {
  const double b = model.threshold.value(t);
  const double ft = model.girsanov.lamperti_dt ? model.girsanov.lamperti_dt(t, b, z) : 0.0;
  return ft + model.threshold.derivative(t) / model.sigma(t, b, z);
}

double transformed_slope_infimum(const PDifMPModel& model) {
  return model.girsanov.threshold_slope_infimum.value_or(model.threshold.derivative_infimum());
}

double gamma1(const PDifMPModel& model, double t, double z) {
  const GirsanovData& g = model.girsanov;
  double v;
  if (g.gamma1_closed) {
    v = g.gamma1_closed(t, z);
  } else {
    const double b = transformed_threshold(model, t, z);
    v = -g.antiderivative_dt(t, b, z) - g.drift(t, b, z) * transformed_threshold_slope(model, t, z);
  }
  return checked_nonnegative(v, "gamma1", t, std::numeric_limits<double>::quiet_NaN());
}

double gamma2(const PDifMPModel& model, double t, double x, double z) {
  const GirsanovData& g = model.girsanov;
  double v;
  if (g.gamma2_closed) {
    v = g.gamma2_closed(t, x, z);
  } else {
    const double a = g.drift(t, x, z);
    v = g.antiderivative_dt(t, x, z) + 0.5 * (g.drift_dx(t, x, z) + a * a);
  }
  return checked_nonnegative(v, "gamma2", t, x);
}

GirsanovBounds grid_suprema(const PDifMPModel& model, double horizon,
                            const NumericBoundsOptions& options) {
  if (options.grid < 2) throw ArgumentError("numeric bounds grid needs at least 2 points");
  const double ninf = -std::numeric_limits<double>::infinity();
  GirsanovBounds sup{ninf, ninf, ninf};
  const int n = options.grid;
  for (double z : probe_modes(model)) {
    for (int i = 0; i < n; ++i) {
      const double t = horizon * i / (n - 1);
      const double b = transformed_threshold(model, t, z);
      const double g1 = gamma1(model, t, z);
      for (int k = 0; k < n; ++k) {
        const double x = b - options.depth * k / (n - 1);
        const double g2 = gamma2(model, t, x, z);
        const double a = model.girsanov.antiderivative(t, x, z);
        if (!std::isfinite(g1 + g2) || !std::isfinite(a)) {
          throw UnboundedFunctional("Girsanov functionals are not finite at t = " +
                                    std::to_string(t) + ", x = " + std::to_string(x));
        }
        sup.kappa = std::max(sup.kappa, g1 + g2);
        sup.kappa2 = std::max(sup.kappa2, g2);
        sup.a_plus = std::max(sup.a_plus, a);
      }
    }
  }
  return sup;
}

GirsanovBounds bounds(const PDifMPModel& model, double horizon,
                      const NumericBoundsOptions& options) {
  const GirsanovData& g = model.girsanov;
  const bool complete = g.kappa && g.kappa2 && g.a_plus;
  if (!complete && !g.numeric_bounds) {
    throw UnboundedFunctional("model '" + model.name +
                              "' has no analytic bounds and numeric fallback is disabled");
  }
  GirsanovBounds out;
  if (!complete) {
    const GirsanovBounds sup = grid_suprema(model, horizon, options);
    // Push each supremum outward by the safety factor, whatever its sign.
    auto inflate = [&](double v) { return v + (options.safety - 1.0) * std::abs(v); };
    out = {inflate(sup.kappa), inflate(sup.kappa2), inflate(sup.a_plus)};
  }
  if (g.kappa) out.kappa = *g.kappa;
  if (g.kappa2) out.kappa2 = *g.kappa2;
  if (g.a_plus) out.a_plus = *g.a_plus;
  if (!std::isfinite(out.kappa) || !std::isfinite(out.kappa2) || !std::isfinite(out.a_plus)) {
    throw UnboundedFunctional("Girsanov bounds are not finite for model '" + model.name + "'");
  }
  if (out.kappa < 0.0 || out.kappa2 < 0.0) {
    throw UnboundedFunctional("Girsanov rate bounds must be non-negative");
  }
  return out;
}

}  // namespace pdifmp
