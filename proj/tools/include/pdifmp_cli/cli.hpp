#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pdifmp/hybrid.hpp"

namespace pdifmp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitRuntime = 3;

// Full command line entry point; returns one of the exit codes above.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int cmd_sample(const std::string& config_path, const std::string& method,
               const std::string& out_path, std::ostream& err);
int cmd_compare(const std::string& config_path, const std::string& out_path,
                std::ostream& err);
int cmd_catalog(std::ostream& out);

// CSV with header sample_index,tau,censored,jumps_before,crossed_by_jump.
std::string samples_to_csv(const std::vector<FPTSample>& samples);

}  // namespace pdifmp::cli
