#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace o21 {

// Runs fn(i) for every i in [0, count) on up to `workers` threads.  fn must
// be safe to call concurrently for distinct i; the first exception thrown by
// any task is rethrown after all threads join.
inline void parallel_for_index(std::size_t count, int workers,
                               const std::function<void(std::size_t)>& fn) {
  if (count == 0) return;
  if (workers < 1) workers = 1;
  std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(workers), count);
  if (nthreads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (std::size_t t = 0; t < nthreads; ++t) {
    pool.emplace_back([&]() {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= count || failed.load()) return;
        try {
          fn(i);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failed.load() && error) std::rethrow_exception(error);
}

}  // namespace o21
