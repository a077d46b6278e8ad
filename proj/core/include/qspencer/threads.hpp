#pragma once

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace qsp {

// Progress reporting for long block computations, off by default.  Messages
// go to stderr only, so machine-readable stdout stays clean.
inline std::atomic<bool>& progress_flag() {
  static std::atomic<bool> flag{false};
  return flag;
}
inline void enable_progress(bool on) { progress_flag() = on; }
inline void report_progress(const char* what, long done, long total) {
  if (!progress_flag()) return;
  if (done == total || (total >= 8 && done % (total / 4) == 0))
    std::fprintf(stderr, "%s: %ld/%ld weight blocks\n", what, done, total);
}

// Worker count from QSPENCER_THREADS, else hardware concurrency.
inline unsigned thread_count() {
  if (const char* env = std::getenv("QSPENCER_THREADS")) {
    const long v = std::atol(env);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Runs fn(0..count-1) across workers.  Results must be written to
// preallocated per-index slots so the outcome is order independent.
inline void parallel_for(long count, const std::function<void(long)>& fn) {
  const unsigned workers = std::min<unsigned>(thread_count(), count > 0 ? count : 1);
  if (workers <= 1 || count <= 1) {
    for (long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errs(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (long i = w; i < count; i += workers) fn(i);
      } catch (...) {
        errs[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
}

}  // namespace qsp
