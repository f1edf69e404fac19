#pragma once

#include <cstdint>
#include <random>

namespace pdifmp {

using Rng = std::mt19937_64;

// Separates the streams of different simulation methods run from the same
// seed, so that paired batches stay independent.
enum class StreamDomain : std::uint64_t { exact = 1, euler_maruyama = 2, test = 3 };

// Independent stream for sample `index` of a run seeded with `seed`. The
// stream depends only on (seed, index, domain), never on scheduling.
Rng make_stream(std::uint64_t seed, std::uint64_t index,
                StreamDomain domain = StreamDomain::exact);

double uniform01(Rng& rng);
double standard_normal(Rng& rng);
// Exponential variate with the given rate (mean 1/rate).
double exponential(double rate, Rng& rng);

}  // namespace pdifmp
