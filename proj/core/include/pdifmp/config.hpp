#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pdifmp/conditional.hpp"
#include "pdifmp/model.hpp"

namespace pdifmp {

// One JSON file drives both the exact and the EM runs.
struct RunConfig {
  std::string model;
  CatalogParams params;
  double horizon = 3.0;
  std::size_t n = 3000;
  std::uint64_t seed = 1;
  std::size_t workers = 1;
  std::optional<double> s_init;
  std::vector<double> s_min_values{-10.0};
  double s_decrement = 1.0;
  double epsilon = 1e-3;
  double em_h = 1e-3;

  PDifMPModel build_model() const;
  ConditionalConfig exact_config(double s_min) const;
  // The most negative s_min, used when a single exact run is requested.
  double primary_s_min() const;
};

// Throws ConfigError on malformed JSON, unknown keys, wrong types or values
// out of range.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

}  // namespace pdifmp
