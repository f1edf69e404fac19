#include "models.hpp"

namespace testmodels {

using pdifmp::HybridState;
using pdifmp::PDifMPModel;
using pdifmp::Threshold;

PDifMPModel zero_drift(double intercept, double slope, double y0, double lambda) {
  PDifMPModel m;
  m.name = "zero_drift";
  auto zero = [](double, double, double) { return 0.0; };
  m.mu = zero;
  m.sigma = [](double, double, double) { return 1.0; };
  m.jump_rate = lambda;
  m.jump_size = zero;
  m.kernel_sampler = [](double, const HybridState& s) { return s.z; };
  m.threshold = Threshold::linear(intercept, slope);
  m.initial = {y0, 1.0};
  auto& g = m.girsanov;
  g.lamperti = [](double, double y, double) { return y; };
  g.lamperti_inverse = [](double, double x, double) { return x; };
  g.lamperti_affine = true;
  g.drift = zero;
  g.drift_dx = zero;
  g.antiderivative = zero;
  g.antiderivative_dt = zero;
  g.kappa = 0.0;
  g.kappa2 = 0.0;
  g.a_plus = 0.0;
  return m;
}

PDifMPModel constant_gamma(double g1, double g2, double intercept, double slope, double y0) {
  PDifMPModel m = zero_drift(intercept, slope, y0);
  m.name = "constant_gamma";
  auto& g = m.girsanov;
  g.gamma1_closed = [g1](double, double) { return g1; };
  g.gamma2_closed = [g2](double, double, double) { return g2; };
  g.kappa = g1 + g2;
  g.kappa2 = g2;
  return m;
}

PDifMPModel scaled_sigma(double level) {
  PDifMPModel m = zero_drift(level, 0.0, 0.0);
  m.name = "scaled_sigma";
  m.sigma = [](double, double, double) { return 2.0; };
  auto& g = m.girsanov;
  g.lamperti = [](double, double y, double) { return y / 2.0; };
  g.lamperti_inverse = [](double, double x, double) { return 2.0 * x; };
  return m;
}

}  // namespace testmodels
