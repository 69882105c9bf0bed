#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace bichroma {

/// Worker count from BICHROMA_THREADS; unset or invalid means 1.
inline unsigned thread_count() {
  const char* env = std::getenv("BICHROMA_THREADS");
  if (!env) return 1;
  try {
    const long v = std::stol(env);
    return v > 0 ? static_cast<unsigned>(v) : 1U;
  } catch (...) {
    return 1;
  }
}

/// Runs body(i) for i in [0, count). Iterations must be independent; callers
/// write into per-index slots and reduce afterwards so results do not depend
/// on scheduling. The first exception thrown by any worker is rethrown.
template <typename Body>
void parallel_for(std::size_t count, Body&& body, unsigned threads = thread_count()) {
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += threads) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace bichroma
