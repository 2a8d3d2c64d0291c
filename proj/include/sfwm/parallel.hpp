#pragma once
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace sfwm {

// Evaluates fn(i) for i in [0, n) across a worker pool. Results must be
// written by fn into preallocated slots so the output order is independent
// of scheduling. The first exception thrown by any worker is rethrown.
inline void parallel_for(size_t n, const std::function<void(size_t)>& fn,
                         int threads = 0) {
  size_t nt = threads > 0 ? static_cast<size_t>(threads)
                          : std::max(1u, std::thread::hardware_concurrency());
  nt = std::min(nt, n);
  if (nt <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errs(nt);
  for (size_t t = 0; t < nt; ++t) {
    pool.emplace_back([&, t]() {
      try {
        for (size_t i = t; i < n; i += nt) fn(i);
      } catch (...) {
        errs[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
}

}  // namespace sfwm
