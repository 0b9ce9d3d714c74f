#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace sdelab {

inline unsigned resolve_workers(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Calls body(i) for i in [0, count) on up to `workers` threads. Work is
// claimed dynamically; callers must write results into index-addressed slots
// so the outcome does not depend on scheduling. The first exception thrown
// by any body is rethrown on the calling thread.
template <typename Body>
void parallel_for(std::size_t count, unsigned workers, Body&& body) {
  workers = static_cast<unsigned>(std::min<std::size_t>(resolve_workers(workers), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            body(i);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            next = count;
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace sdelab
