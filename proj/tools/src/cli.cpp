#include "pdifmp_cli/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "pdifmp/config.hpp"
#include "pdifmp/error.hpp"
#include "pdifmp/reference_em.hpp"
#include "pdifmp/stats.hpp"

namespace pdifmp::cli {

namespace {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write '" + path + "'");
  f << content;
  if (!f) throw Error("failed writing '" + path + "'");
}

std::vector<double> taus(const std::vector<FPTSample>& samples) {
  std::vector<double> v;
  v.reserve(samples.size());
  for (const auto& s : samples) v.push_back(s.tau);
  return v;
}

std::string kde_csv(const std::vector<double>& samples, double horizon) {
  constexpr int kPoints = 301;
  std::vector<double> grid(kPoints);
  for (int i = 0; i < kPoints; ++i) grid[i] = horizon * i / (kPoints - 1);
  std::string csv = "grid,density\n";
  try {
    const auto dens = kde_gaussian(samples, grid);
    for (int i = 0; i < kPoints; ++i)
      csv += format_double(grid[i]) + "," + format_double(dens[i]) + "\n";
  } catch (const ArgumentError&) {
    // Degenerate sample: emit the header only.
  }
  return csv;
}

std::string strip_json_suffix(const std::string& path) {
  const std::string ext = ".json";
  if (path.size() > ext.size() && path.compare(path.size() - ext.size(), ext.size(), ext) == 0)
    return path.substr(0, path.size() - ext.size());
  return path;
}

template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    body();
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}

}  // namespace

std::string samples_to_csv(const std::vector<FPTSample>& samples) {
  std::string csv = "sample_index,tau,censored,jumps_before,crossed_by_jump\n";
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const FPTSample& s = samples[i];
    csv += std::to_string(i) + "," + format_double(s.tau) + "," + (s.censored ? "1" : "0") +
           "," + std::to_string(s.jumps_before) + "," + (s.crossed_by_jump ? "1" : "0") + "\n";
  }
  return csv;
}

int cmd_sample(const std::string& config_path, const std::string& method,
               const std::string& out_path, std::ostream& err) {
  return guarded(err, [&] {
    if (method != "exact" && method != "em")
      throw ConfigError("method must be 'exact' or 'em'");
    const RunConfig cfg = load_config(config_path);
    const PDifMPModel model = cfg.build_model();
    const std::vector<FPTSample> samples =
        method == "exact"
            ? run_batch(model, cfg.horizon, cfg.exact_config(cfg.primary_s_min()), cfg.n,
                        cfg.seed, cfg.workers)
            : run_em_batch(model, cfg.horizon, cfg.em_h, cfg.n, cfg.seed, cfg.workers);
    write_file(out_path, samples_to_csv(samples));
  });
}

int cmd_compare(const std::string& config_path, const std::string& out_path,
                std::ostream& err) {
  return guarded(err, [&] {
    const RunConfig cfg = load_config(config_path);
    const PDifMPModel model = cfg.build_model();
    const std::string stem = strip_json_suffix(out_path);

    const std::vector<double> em =
        taus(run_em_batch(model, cfg.horizon, cfg.em_h, cfg.n, cfg.seed, cfg.workers));
    write_file(stem + "_kde_em.csv", kde_csv(em, cfg.horizon));

    nlohmann::ordered_json report;
    report["model"] = cfg.model;
    report["lambda"] = cfg.params.lambda;
    report["y0"] = cfg.params.y0;
    report["threshold"] = {{"intercept", cfg.params.intercept}, {"slope", cfg.params.slope}};
    report["Tf"] = cfg.horizon;
    report["n"] = cfg.n;
    report["seed"] = cfg.seed;
    report["epsilon"] = cfg.epsilon;
    report["s_decrement"] = cfg.s_decrement;
    report["em"] = {{"h", cfg.em_h},
                    {"mean", sample_mean(em)},
                    {"variance", sample_variance(em)},
                    {"kde_csv", stem + "_kde_em.csv"}};
    nlohmann::ordered_json results = nlohmann::ordered_json::array();
    for (double s_min : cfg.s_min_values) {
      const std::vector<double> exact = taus(
          run_batch(model, cfg.horizon, cfg.exact_config(s_min), cfg.n, cfg.seed, cfg.workers));
      const ComparisonReport r = compare_samples(exact, em);
      const std::string kde_path = stem + "_kde_exact_smin" + format_double(s_min) + ".csv";
      write_file(kde_path, kde_csv(exact, cfg.horizon));
      results.push_back({{"s_min", s_min},
                         {"ks_d", r.ks_d},
                         {"p_value", r.p_value},
                         {"exact_mean", r.mean1},
                         {"exact_variance", r.var1},
                         {"kde_csv", kde_path}});
    }
    report["results"] = results;
    write_file(out_path, report.dump(2) + "\n");
  });
}

int cmd_catalog(std::ostream& out) {
  out << "example1  dY = (1.6 + sin Y) dt + dB, jump -z sin(y), z ~ Exp(1), z0 = 1\n"
      << "example2  dY = (z + sin(t + Y)/2) dt + dB, jump (1 - y)/z, z ~ U(1.8, 3), z0 = 2.4\n"
      << "both: threshold intercept + slope t (default 1 - t), lambda = 1, y0 = -1\n";
  return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact first-passage-time sampling for piecewise diffusion Markov processes"};
  app.require_subcommand(1);

  std::string config_path;
  std::string method = "exact";
  std::string out_path;

  CLI::App* sample = app.add_subcommand("sample", "Write FPT samples as CSV");
  sample->add_option("--config", config_path, "JSON config")->required();
  sample->add_option("--method", method, "exact or em")->check(CLI::IsMember({"exact", "em"}));
  sample->add_option("--out", out_path, "Output CSV")->required();

  CLI::App* compare = app.add_subcommand("compare", "Compare exact and EM samples");
  compare->add_option("--config", config_path, "JSON config")->required();
  compare->add_option("--out", out_path, "Output JSON report")->required();

  CLI::App* catalog = app.add_subcommand("catalog", "List the built-in models");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitConfig;
  }

  if (sample->parsed()) return cmd_sample(config_path, method, out_path, err);
  if (compare->parsed()) return cmd_compare(config_path, out_path, err);
  if (catalog->parsed()) return cmd_catalog(out);
  return kExitConfig;
}

}  // namespace pdifmp::cli
