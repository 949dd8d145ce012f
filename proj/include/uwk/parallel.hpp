#pragma once

// Data-parallel index sweep capped by the UWK_THREADS environment variable.
// Work items must be independent; results are written by index.

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace uwk {

inline unsigned thread_count() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("UWK_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1 && v < 256) hw = std::min<unsigned>(hw, static_cast<unsigned>(v));
  }
  return hw;
}

inline void parallel_for(size_t n, const std::function<void(size_t)>& fn) {
  unsigned t = thread_count();
  if (t <= 1 || n < 2 * t) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(t);
  for (unsigned w = 0; w < t; ++w)
    pool.emplace_back([&, w] {
      for (size_t i = w; i < n; i += t) fn(i);
    });
  for (std::thread& th : pool) th.join();
}

}  // namespace uwk
