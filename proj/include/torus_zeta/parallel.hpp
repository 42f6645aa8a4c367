#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace tzeta {

/// Worker cap for fan-out loops: hardware concurrency clipped by the
/// TORUS_ZETA_THREADS environment variable (values < 1 mean serial).
unsigned max_workers();

/// Runs fn(i) for i in [0, n). Work items must write only to their own
/// slots; assembly order is the caller's, so results are deterministic
/// regardless of scheduling. The first exception thrown by a worker is
/// rethrown on the calling thread.
template <typename F>
void parallel_for(std::size_t n, F&& fn) {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(max_workers(), n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    while (!failed.load(std::memory_order_relaxed)) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) break;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        failed.store(true, std::memory_order_relaxed);
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(run);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace tzeta
