#pragma once

#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace posat {

/// POSAT_THREADS when set to a positive integer, else the hardware
/// concurrency (at least 1).
int default_threads();

/// `requested` when positive, else `default_threads()`.
int resolve_threads(int requested);

/// Runs body(worker, workers) on `workers` threads (inline when 1) and
/// rethrows the first exception after all have joined.
template <class Body>
void run_workers(int workers, Body&& body) {
  if (workers <= 1) {
    body(0, 1);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        body(w, workers);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace posat
