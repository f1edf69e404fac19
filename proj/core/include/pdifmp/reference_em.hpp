#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pdifmp/hybrid.hpp"
#include "pdifmp/model.hpp"
#include "pdifmp/rng.hpp"

namespace pdifmp {

inline constexpr double kDefaultEmStep = 1e-3;

// Euler-Maruyama first passage censored at `horizon`. The step grid restarts
// at every jump time, which is inserted exactly; crossings are checked at grid
// points and on both sides of each jump. Throws ArgumentError for h <= 0 and
// ModelError on a non-finite state.
FPTSample simulate_em_fpt(const PDifMPModel& model, double horizon, double h, Rng& rng);

// n EM samples with the same determinism contract as run_batch, on streams
// independent of the exact sampler's for the same seed.
std::vector<FPTSample> run_em_batch(const PDifMPModel& model, double horizon, double h,
                                    std::size_t n, std::uint64_t seed, std::size_t workers);

}  // namespace pdifmp
