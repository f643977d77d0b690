#pragma once

// Work-stealing-free parallel index loop. FLATCHECK_THREADS caps the worker
// count; the default is the machine parallelism. Exceptions from workers are
// rethrown after the join, first one wins.

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace flatcheck::detail {

inline std::size_t max_threads() {
  if (const char* env = std::getenv("FLATCHECK_THREADS")) {
    const long v = std::atol(env);
    if (v >= 1) return static_cast<std::size_t>(v);
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc ? hc : 1;
}

template <class Fn>
void parallel_for(std::uint64_t n, Fn&& fn) {
  const std::size_t workers =
      static_cast<std::size_t>(std::min<std::uint64_t>(max_threads(), n ? n : 1));
  if (workers <= 1) {
    for (std::uint64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::mutex err_mu;
  std::exception_ptr err;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::uint64_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mu);
          if (!err) err = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace flatcheck::detail
