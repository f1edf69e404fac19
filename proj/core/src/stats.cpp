#include "pdifmp/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "json.hpp"

#include "pdifmp/error.hpp"

namespace pdifmp {

namespace {

void require_nonempty(const std::vector<double>& v, const char* what) {
  if (v.empty()) throw ArgumentError(std::string(what) + " must not be empty");
}

}  // namespace

double ecdf(const std::vector<double>& samples, double x) {
  require_nonempty(samples, "sample");
  const auto count = std::count_if(samples.begin(), samples.end(),
                                   [x](double v) { return v <= x; });
  return static_cast<double>(count) / static_cast<double>(samples.size());
}

double kolmogorov_survival(double lambda) {
  if (!(lambda > 0.0)) return 1.0;
  constexpr double pi = std::numbers::pi;
  if (lambda < 1.18) {
    // P(K <= lambda) = sqrt(2 pi)/lambda sum exp(-(2k-1)^2 pi^2 / (8 lambda^2)).
    double cdf = 0.0;
    for (int k = 1; k <= 50; ++k) {
      const double m = 2.0 * k - 1.0;
      cdf += std::exp(-m * m * pi * pi / (8.0 * lambda * lambda));
    }
    cdf *= std::sqrt(2.0 * pi) / lambda;
    return std::clamp(1.0 - cdf, 0.0, 1.0);
  }
  double p = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    p += (k % 2 == 1 ? 2.0 : -2.0) * term;
    if (term < 1e-300) break;
  }
  return std::clamp(p, 0.0, 1.0);
}

KSResult ks_two_sample(std::vector<double> a, std::vector<double> b) {
  require_nonempty(a, "first sample");
  require_nonempty(b, "second sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double n1 = static_cast<double>(a.size());
  const double n2 = static_cast<double>(b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / n1 - static_cast<double>(j) / n2));
  }
  const double ne = n1 * n2 / (n1 + n2);
  return {d, d == 0.0 ? 1.0 : kolmogorov_survival(std::sqrt(ne) * d)};
}

KSResult ks_one_sample(std::vector<double> samples, const std::function<double(double)>& cdf) {
  require_nonempty(samples, "sample");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return {d, kolmogorov_survival(std::sqrt(n) * d)};
}

double sample_mean(const std::vector<double>& samples) {
  require_nonempty(samples, "sample");
  double s = 0.0;
  for (double v : samples) s += v;
  return s / static_cast<double>(samples.size());
}

double sample_variance(const std::vector<double>& samples) {
  const double m = sample_mean(samples);
  if (samples.size() < 2) return 0.0;
  double s = 0.0;
  for (double v : samples) s += (v - m) * (v - m);
  return s / static_cast<double>(samples.size() - 1);
}

double silverman_bandwidth(const std::vector<double>& samples) {
  if (samples.size() < 2) throw ArgumentError("KDE needs at least two samples");
  const double sd = std::sqrt(sample_variance(samples));
  if (!(sd > 0.0)) throw ArgumentError("KDE needs a sample with nonzero variance");
  return 1.06 * sd * std::pow(static_cast<double>(samples.size()), -0.2);
}

std::vector<double> kde_gaussian(const std::vector<double>& samples,
                                 const std::vector<double>& grid) {
  const double bw = silverman_bandwidth(samples);
  const double norm =
      1.0 / (static_cast<double>(samples.size()) * bw * std::sqrt(2.0 * std::numbers::pi));
  std::vector<double> out;
  out.reserve(grid.size());
  for (double g : grid) {
    double s = 0.0;
    for (double v : samples) {
      const double u = (g - v) / bw;
      s += std::exp(-0.5 * u * u);
    }
    out.push_back(s * norm);
  }
  return out;
}

ComparisonReport compare_samples(const std::vector<double>& a, const std::vector<double>& b,
                                 std::string label) {
  const KSResult ks = ks_two_sample(a, b);
  ComparisonReport r;
  r.label = std::move(label);
  r.n1 = a.size();
  r.n2 = b.size();
  r.ks_d = ks.d;
  r.p_value = ks.p;
  r.mean1 = sample_mean(a);
  r.var1 = sample_variance(a);
  r.mean2 = sample_mean(b);
  r.var2 = sample_variance(b);
  return r;
}

std::string report_to_json(const ComparisonReport& r) {
  nlohmann::ordered_json j;
  j["label"] = r.label;
  j["n1"] = r.n1;
  j["n2"] = r.n2;
  j["ks_d"] = r.ks_d;
  j["p_value"] = r.p_value;
  j["mean1"] = r.mean1;
  j["var1"] = r.var1;
  j["mean2"] = r.mean2;
  j["var2"] = r.var2;
  nlohmann::ordered_json settings = nlohmann::ordered_json::object();
  for (const auto& [key, value] : r.settings) settings[key] = value;
  j["settings"] = settings;
  return j.dump(2);
}

}  // namespace pdifmp
