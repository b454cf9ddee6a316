#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace eisen {

// Worker cap: EISEN_THREADS if set and positive, else hardware concurrency.
int worker_count();

// Runs body(i) for i in [0, n). Work is handed out in index order through an
// atomic counter; callers write results into per-index slots and reduce them
// afterwards in index order, so output does not depend on the thread count.
// The first exception thrown by any body is rethrown on the calling thread.
template <class F>
void parallel_for(std::int64_t n, F&& body) {
  if (n <= 0) return;
  const int workers = static_cast<int>(std::min<std::int64_t>(worker_count(), n));
  if (workers <= 1) {
    for (std::int64_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    for (;;) {
      const std::int64_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(n);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (int w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace eisen
