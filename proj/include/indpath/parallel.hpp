// parallel.hpp
// Deterministic fork-join helper: work is split into indexed blocks, workers
// compute block results independently, and the caller folds the results in
// block order. Output is identical for any worker count.

#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace indpath {

// explicit flag (>0) wins, then INDPATH_THREADS, then hardware concurrency
inline int resolve_threads(int flag_value = 0) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("INDPATH_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? (int)hc : 1;
}

// runs fn(block) for block = 0..nblocks-1 on `threads` workers; results are
// collected per block so the caller can fold them in index order
template <typename T>
std::vector<T> parallel_blocks(int nblocks, int threads,
                               const std::function<T(int)>& fn) {
  std::vector<T> results(nblocks);
  if (nblocks == 0) return results;
  int nw = threads < 1 ? 1 : (threads > nblocks ? nblocks : threads);
  if (nw == 1) {
    for (int b = 0; b < nblocks; ++b) results[b] = fn(b);
    return results;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(nw);
  for (int w = 0; w < nw; ++w) {
    pool.emplace_back([&]() {
      for (;;) {
        int b = next.fetch_add(1);
        if (b >= nblocks) break;
        results[b] = fn(b);
      }
    });
  }
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace indpath
