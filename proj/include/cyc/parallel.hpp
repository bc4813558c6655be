#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace cyc {

namespace detail {
// Nested parallel_for calls run serially: one pool level is enough to keep
// every core busy, and fanning out again would only oversubscribe.
inline bool& inside_parallel_region() {
  thread_local bool inside = false;
  return inside;
}
}  // namespace detail

// Runs f(i) for i in [0, n) on a small thread pool. Work is pulled from an
// atomic counter, so callers must write results into per-index slots to stay
// deterministic. The lowest-index exception (if any) is rethrown after all
// workers finish, so error reporting is deterministic too.
template <class F>
void parallel_for(std::size_t n, F&& f) {
  if (n == 0) return;
  unsigned hw = std::thread::hardware_concurrency();
  std::size_t workers = std::min<std::size_t>(n, hw == 0 ? 4 : hw);
  if (workers <= 1 || detail::inside_parallel_region()) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      detail::inside_parallel_region() = true;
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          f(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (std::size_t i = 0; i < n; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
  }
}

}  // namespace cyc
