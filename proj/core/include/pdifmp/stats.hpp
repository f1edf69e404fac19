#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace pdifmp {

struct KSResult {
  double d = 0.0;
  double p = 1.0;
};

// Fraction of samples <= x. Throws ArgumentError on empty input.
double ecdf(const std::vector<double>& samples, double x);

// Survival function of the Kolmogorov distribution, P(K > lambda).
double kolmogorov_survival(double lambda);

// d = sup |F_a - F_b|, p from the asymptotic Kolmogorov law with effective
// size n1 n2 / (n1 + n2).
KSResult ks_two_sample(std::vector<double> a, std::vector<double> b);

// One-sample test against a continuous CDF, asymptotic p-value.
KSResult ks_one_sample(std::vector<double> samples, const std::function<double(double)>& cdf);

// Silverman bandwidth 1.06 sd n^(-1/5). Throws ArgumentError for fewer than
// two samples or zero variance.
double silverman_bandwidth(const std::vector<double>& samples);
std::vector<double> kde_gaussian(const std::vector<double>& samples,
                                 const std::vector<double>& grid);

double sample_mean(const std::vector<double>& samples);
// Unbiased (n - 1) variance; 0 for a single sample.
double sample_variance(const std::vector<double>& samples);

struct ComparisonReport {
  std::string label;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  double ks_d = 0.0;
  double p_value = 1.0;
  double mean1 = 0.0;
  double var1 = 0.0;
  double mean2 = 0.0;
  double var2 = 0.0;
  std::vector<std::pair<std::string, double>> settings;
};

ComparisonReport compare_samples(const std::vector<double>& a, const std::vector<double>& b,
                                 std::string label = {});

// JSON object with the report fields; settings become a nested object.
std::string report_to_json(const ComparisonReport& report);

}  // namespace pdifmp
