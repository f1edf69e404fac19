#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "pdifmp/error.hpp"
#include "pdifmp/rng.hpp"

namespace pdifmp {

// Runs fn(rng) for indices 0..n-1, each with its own stream derived from
// (seed, index, domain). Output order and content do not depend on `workers`.
// The failure with the smallest index is rethrown as BatchError.
template <class Result, class SampleFn>
std::vector<Result> run_indexed(std::size_t n, std::uint64_t seed, std::size_t workers,
                                StreamDomain domain, SampleFn&& fn) {
  if (n == 0) throw ArgumentError("batch size must be at least 1");
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, n);

  std::vector<Result> out(n);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::mutex error_mutex;
  std::size_t error_index = std::numeric_limits<std::size_t>::max();
  std::string error_message;

  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n || failed.load()) return;
      try {
        Rng rng = make_stream(seed, i, domain);
        out[i] = fn(rng);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (i < error_index) {
          error_index = i;
          error_message = e.what();
        }
        failed.store(true);
      }
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failed.load()) throw BatchError(error_index, error_message);
  return out;
}

}  // namespace pdifmp
