#include "pdifmp/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "pdifmp/error.hpp"

namespace pdifmp {

Threshold Threshold::linear(double intercept, double slope) {
  if (!std::isfinite(intercept) || !std::isfinite(slope)) {
    throw ArgumentError("linear threshold needs finite intercept and slope");
  }
  Threshold th;
  th.kind_ = Kind::linear;
  th.intercept_ = intercept;
  th.slope_ = slope;
  th.derivative_infimum_ = slope;
  return th;
}

Threshold Threshold::custom(TimeFunction value, TimeFunction derivative,
                            double derivative_infimum) {
  if (!value || !derivative) throw ArgumentError("custom threshold needs value and derivative");
  if (!std::isfinite(derivative_infimum)) {
    throw ArgumentError("custom threshold needs a finite derivative infimum");
  }
  Threshold th;
  th.kind_ = Kind::custom;
  th.derivative_infimum_ = derivative_infimum;
  th.value_ = std::move(value);
  th.derivative_ = std::move(derivative);
  return th;
}

double Threshold::value(double t) const {
  if (kind_ == Kind::linear) return intercept_ + slope_ * t;
  return value_(t);
}

double Threshold::derivative(double t) const {
  if (kind_ == Kind::linear) return slope_;
  return derivative_(t);
}

namespace {

void require_catalog_params(const CatalogParams& p) {
  if (!(p.lambda > 0.0) || !std::isfinite(p.lambda)) {
    throw ConfigError("lambda must be positive and finite");
  }
  if (!std::isfinite(p.y0) || !std::isfinite(p.intercept) || !std::isfinite(p.slope)) {
    throw ConfigError("y0 and threshold parameters must be finite");
  }
  if (!(p.y0 < p.intercept)) throw ConfigError("y0 must start below the threshold");
}

}  // namespace

PDifMPModel catalog_example1(const CatalogParams& p) {
  require_catalog_params(p);
  // gamma1 = -slope * (1.6 + sin(beta)) is non-negative only for a
  // non-increasing threshold.
  if (p.slope > 0.0) throw ConfigError("example1 needs a non-increasing threshold (slope <= 0)");

  PDifMPModel m;
  m.name = "example1";
  m.mu = [](double, double y, double) { return 1.6 + std::sin(y); };
  m.sigma = [](double, double, double) { return 1.0; };
  m.jump_rate = p.lambda;
  m.jump_size = [](double, double y, double z) { return -z * std::sin(y); };
  m.kernel_sampler = [](double u, const HybridState&) { return -std::log1p(-u); };
  m.threshold = Threshold::linear(p.intercept, p.slope);
  m.initial = {p.y0, 1.0};

  GirsanovData& g = m.girsanov;
  g.lamperti = [](double, double y, double) { return y; };
  g.lamperti_inverse = [](double, double x, double) { return x; };
  g.lamperti_affine = true;
  g.drift = [](double, double x, double) { return 1.6 + std::sin(x); };
  g.drift_dx = [](double, double x, double) { return std::cos(x); };
  g.antiderivative = [](double, double x, double) { return 1.6 * x - std::cos(x); };
  g.antiderivative_dt = [](double, double, double) { return 0.0; };
  const double c = p.intercept;
  const double s = p.slope;
  g.gamma1_closed = [c, s](double t, double) { return -s * (1.6 + std::sin(c + s * t)); };
  g.gamma2_closed = [](double, double x, double) {
    const double a = 1.6 + std::sin(x);
    return 0.5 * (a * a + std::cos(x));
  };
  // gamma1 <= 2.6 |slope|, gamma2 <= 3.88, and A is increasing so on
  // x <= intercept it is bounded by A(intercept); 2.6 covers intercept = 1.
  g.kappa2 = 3.88;
  g.kappa = 2.6 * std::abs(s) + 3.88;
  g.a_plus = std::max(2.6, 1.6 * c - std::cos(c));
  return m;
}

PDifMPModel catalog_example2(const CatalogParams& p) {
  require_catalog_params(p);
  const double c = p.intercept;
  const double s = p.slope;
  // gamma1 = -(1 + s) sin(t + beta)/2 - s z with z >= 1.8.
  if (!(s <= 0.0) || 1.8 * std::abs(s) < 0.5 * std::abs(1.0 + s)) {
    throw ConfigError("example2 needs slope <= 0 with 1.8|slope| >= |1 + slope|/2");
  }

  PDifMPModel m;
  m.name = "example2";
  m.mu = [](double t, double y, double z) { return z + 0.5 * std::sin(t + y); };
  m.sigma = [](double, double, double) { return 1.0; };
  m.jump_rate = p.lambda;
  m.jump_size = [](double, double y, double z) { return (1.0 - y) / z; };
  m.kernel_sampler = [](double u, const HybridState&) { return 1.8 + 1.2 * u; };
  m.threshold = Threshold::linear(c, s);
  m.initial = {p.y0, 2.4};

  GirsanovData& g = m.girsanov;
  g.lamperti = [](double, double y, double) { return y; };
  g.lamperti_inverse = [](double, double x, double) { return x; };
  g.lamperti_affine = true;
  g.drift = [](double t, double x, double z) { return z + 0.5 * std::sin(t + x); };
  g.drift_dx = [](double t, double x, double) { return 0.5 * std::cos(t + x); };
  g.antiderivative = [](double t, double x, double z) { return z * x - 0.5 * std::cos(t + x); };
  g.antiderivative_dt = [](double t, double x, double) { return 0.5 * std::sin(t + x); };
  g.gamma1_closed = [c, s](double t, double z) {
    const double phase = std::sin(t + c + s * t);
    return -0.5 * (1.0 + s) * phase - s * z;
  };
  g.gamma2_closed = [](double t, double x, double z) {
    const double sn = std::sin(t + x);
    const double a = z + 0.5 * sn;
    return 0.5 * sn + 0.5 * (0.5 * std::cos(t + x) + a * a);
  };
  // z in [1.8, 3]: gamma2 <= 1/2 + 1/4 + 3.5^2/2, gamma1 <= |1+s|/2 + 3|s|,
  // A <= z * intercept + 1/2 on x <= beta(t) <= intercept.
  g.kappa2 = 0.75 + 0.5 * 3.5 * 3.5;
  g.kappa = 0.5 * std::abs(1.0 + s) + 3.0 * std::abs(s) + *g.kappa2;
  g.a_plus = (c >= 0.0 ? 3.0 * c : 1.8 * c) + 0.5;
  return m;
}

std::vector<std::string> catalog_names() { return {"example1", "example2"}; }

PDifMPModel catalog_model(const std::string& name, const CatalogParams& params) {
  if (name == "example1") return catalog_example1(params);
  if (name == "example2") return catalog_example2(params);
  throw ConfigError("unknown model '" + name + "'");
}

HybridState apply_jump(const PDifMPModel& model, double t, const HybridState& state,
                       double u) {
  if (!std::isfinite(t)) throw ModelError("jump time must be finite");
  const double y = state.y + model.jump_size(t, state.y, state.z);
  const double z = model.kernel_sampler(u, state);
  if (!std::isfinite(y) || !std::isfinite(z)) {
    throw ModelError("jump update produced a non-finite state");
  }
  return {y, z};
}

std::vector<double> probe_modes(const PDifMPModel& model) {
  std::vector<double> modes{model.initial.z};
  for (double u : {0.001, 0.01, 0.1, 0.25, 0.5, 0.75, 0.9, 0.99, 0.999}) {
    const double z = model.kernel_sampler(u, model.initial);
    if (std::isfinite(z)) modes.push_back(z);
  }
  return modes;
}

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  return v;
}

}  // namespace

void validate_model(const PDifMPModel& model, double horizon) {
  if (!model.mu || !model.sigma || !model.jump_size || !model.kernel_sampler) {
    throw ModelError("model is missing coefficient functions");
  }
  if (!(model.jump_rate > 0.0) || !std::isfinite(model.jump_rate)) {
    throw ModelError("jump rate must be positive and finite");
  }
  if (!(horizon > 0.0) || !std::isfinite(horizon)) {
    throw ModelError("terminal time must be positive and finite");
  }
  if (!std::isfinite(model.initial.y) || !std::isfinite(model.initial.z)) {
    throw ModelError("initial state must be finite");
  }
  if (!(model.initial.y < model.threshold.value(0.0))) {
    throw ModelError("initial value must lie below the threshold");
  }
  for (double t : linspace(0.0, horizon, 33)) {
    if (model.threshold.derivative(t) < model.threshold.derivative_infimum() - 1e-12) {
      throw ModelError("threshold derivative falls below its declared infimum at t = " +
                       std::to_string(t));
    }
  }
}

void validate_for_exact(const PDifMPModel& model, double horizon) {
  validate_model(model, horizon);
  const GirsanovData& g = model.girsanov;
  if (!g.lamperti || !g.lamperti_inverse || !g.drift || !g.drift_dx || !g.antiderivative ||
      !g.antiderivative_dt) {
    throw ModelError("exact method needs complete Girsanov data");
  }
  double lo = model.threshold.value(0.0);
  double hi = lo;
  for (double t : linspace(0.0, horizon, 17)) {
    lo = std::min(lo, model.threshold.value(t));
    hi = std::max(hi, model.threshold.value(t));
  }
  lo = std::min(lo, model.initial.y) - 10.0;
  for (double z : probe_modes(model)) {
    for (double t : linspace(0.0, horizon, 9)) {
      for (double y : linspace(lo, hi, 41)) {
        const double s = model.sigma(t, y, z);
        if (!(s >= 1e-12)) {
          throw ModelError("sigma must be strictly positive for the exact method (sigma(" +
                           std::to_string(t) + ", " + std::to_string(y) + ", " +
                           std::to_string(z) + ") = " + std::to_string(s) + ")");
        }
      }
    }
  }
}

}  // namespace pdifmp
