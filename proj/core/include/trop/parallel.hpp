#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace trop {

/// Thread cap: TROP_THREADS env var, else hardware concurrency. Work is
/// partitioned by index and results land in index-addressed slots, so the
/// thread count never changes any output.
inline int thread_cap() {
  if (const char* env = std::getenv("TROP_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  const int threads = thread_cap();
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (count + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const std::size_t lo = t * chunk;
    const std::size_t hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace trop
