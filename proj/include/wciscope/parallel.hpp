#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace wciscope {

// Worker-count cap: WCISCOPE_THREADS when set, hardware concurrency otherwise.
inline int thread_budget() {
  if (const char* env = std::getenv("WCISCOPE_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(chunk_index, begin, end) over a static split of [0, n) into at
// most `threads` contiguous chunks. fn must confine writes to its chunk.
template <class Fn>
void parallel_chunks(long long n, int threads, Fn&& fn) {
  threads = std::max(1, threads);
  long long chunks = std::min<long long>(threads, std::max<long long>(n, 1));
  if (chunks <= 1) {
    fn(0, 0ll, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(chunks));
  long long base = n / chunks, extra = n % chunks, begin = 0;
  for (long long c = 0; c < chunks; ++c) {
    long long len = base + (c < extra ? 1 : 0);
    pool.emplace_back([&fn, c, begin, len] { fn(c, begin, begin + len); });
    begin += len;
  }
  for (auto& t : pool) t.join();
}

}  // namespace wciscope
