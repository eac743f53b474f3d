#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace sepindex {

/// Explicit request if positive, else SEPINDEX_THREADS, else 1.
int resolve_threads(int requested);

/// Splits [0, count) into `workers` contiguous ranges and runs
/// fn(worker, begin, end) on each, one thread per range. Worker w always
/// receives the same range for a given (count, workers), so callers that
/// merge per-worker results in worker order are reproducible.
template <typename Fn>
void parallel_ranges(std::size_t count, int workers, Fn&& fn) {
  workers = std::max(1, std::min<int>(workers, static_cast<int>(std::max<std::size_t>(count, 1))));
  auto range = [&](int w) {
    return std::pair{count * w / workers, count * (w + 1) / workers};
  };
  if (workers == 1) {
    fn(0, std::size_t{0}, count);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  auto run = [&](int w) {
    try {
      const auto [b, e] = range(w);
      fn(w, b, e);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (int w = 1; w < workers; ++w) pool.emplace_back(run, w);
    run(0);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace sepindex
