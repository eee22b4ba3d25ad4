#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace hourglass {

// Worker bound from HOURGLASS_THREADS (default 1, so runs are sequential and
// byte-identical unless parallelism is asked for explicitly).
inline int thread_budget() {
  if (const char* env = std::getenv("HOURGLASS_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return 1;
}

// Index-space parallel loop; results must be written to per-index slots so
// that the output order is independent of the schedule.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  int workers = thread_budget();
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<std::size_t> next{0};
  for (int t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace hourglass
