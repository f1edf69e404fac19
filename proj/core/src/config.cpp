#include "pdifmp/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "pdifmp/error.hpp"

namespace pdifmp {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                    const std::string& where) {
  for (const auto& item : obj.items()) {
    if (!allowed.count(item.key()))
      throw ConfigError("unknown key '" + item.key() + "' in " + where);
  }
}

const json& require_object(const json& j, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + " must be an object");
  return j;
}

double number(const json& obj, const char* key, double fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number()) throw ConfigError(std::string("'") + key + "' must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ConfigError(std::string("'") + key + "' must be finite");
  return d;
}

std::uint64_t whole(const json& obj, const char* key, std::uint64_t fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number_unsigned())
    throw ConfigError(std::string("'") + key + "' must be a nonnegative integer");
  return v.get<std::uint64_t>();
}

void require_positive(double v, const char* key) {
  if (!(v > 0.0)) throw ConfigError(std::string("'") + key + "' must be positive");
}

}  // namespace

PDifMPModel RunConfig::build_model() const { return catalog_model(model, params); }

ConditionalConfig RunConfig::exact_config(double s_min) const {
  ConditionalConfig cfg;
  cfg.s_init = s_init;
  cfg.s_min = s_min;
  cfg.s_decrement = s_decrement;
  cfg.epsilon = epsilon;
  return cfg;
}

double RunConfig::primary_s_min() const {
  return *std::min_element(s_min_values.begin(), s_min_values.end());
}

RunConfig parse_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  require_object(root, "config");
  reject_unknown(root,
                 {"model", "lambda", "y0", "threshold", "Tf", "n", "seed", "workers", "exact",
                  "em"},
                 "config");

  RunConfig cfg;
  if (!root.contains("model") || !root.at("model").is_string())
    throw ConfigError("'model' must name a catalog model");
  cfg.model = root.at("model").get<std::string>();
  const auto names = catalog_names();
  if (std::find(names.begin(), names.end(), cfg.model) == names.end())
    throw ConfigError("unknown model '" + cfg.model + "'");

  cfg.params.lambda = number(root, "lambda", cfg.params.lambda);
  require_positive(cfg.params.lambda, "lambda");
  cfg.params.y0 = number(root, "y0", cfg.params.y0);
  if (root.contains("threshold")) {
    const json& th = require_object(root.at("threshold"), "'threshold'");
    reject_unknown(th, {"intercept", "slope"}, "'threshold'");
    cfg.params.intercept = number(th, "intercept", cfg.params.intercept);
    cfg.params.slope = number(th, "slope", cfg.params.slope);
  }
  cfg.horizon = number(root, "Tf", cfg.horizon);
  require_positive(cfg.horizon, "Tf");
  cfg.n = whole(root, "n", cfg.n);
  if (cfg.n == 0) throw ConfigError("'n' must be at least 1");
  cfg.seed = whole(root, "seed", cfg.seed);
  cfg.workers = whole(root, "workers", cfg.workers);

  if (root.contains("exact")) {
    const json& ex = require_object(root.at("exact"), "'exact'");
    reject_unknown(ex, {"s_init", "s_min", "s_decrement", "epsilon"}, "'exact'");
    if (ex.contains("s_init")) cfg.s_init = number(ex, "s_init", 0.0);
    if (ex.contains("s_min")) {
      const json& sm = ex.at("s_min");
      cfg.s_min_values.clear();
      if (sm.is_number()) {
        cfg.s_min_values.push_back(sm.get<double>());
      } else if (sm.is_array() && !sm.empty()) {
        for (const json& v : sm) {
          if (!v.is_number()) throw ConfigError("'s_min' entries must be numbers");
          cfg.s_min_values.push_back(v.get<double>());
        }
      } else {
        throw ConfigError("'s_min' must be a number or a non-empty list of numbers");
      }
    }
    cfg.s_decrement = number(ex, "s_decrement", cfg.s_decrement);
    require_positive(cfg.s_decrement, "s_decrement");
    cfg.epsilon = number(ex, "epsilon", cfg.epsilon);
    require_positive(cfg.epsilon, "epsilon");
  }
  if (root.contains("em")) {
    const json& em = require_object(root.at("em"), "'em'");
    reject_unknown(em, {"h"}, "'em'");
    cfg.em_h = number(em, "h", cfg.em_h);
    require_positive(cfg.em_h, "h");
  }

  // Model construction and slope checks surface as config errors.
  try {
    const PDifMPModel m = cfg.build_model();
    validate_model(m, cfg.horizon);
    for (double s_min : cfg.s_min_values) resolve_initial_slope(m, cfg.exact_config(s_min));
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace pdifmp
