#include "locale_lab/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace lab {

int configured_threads(int requested) {
  int t = requested;
  if (t <= 0) {
    if (const char* env = std::getenv("LOCALE_LAB_THREADS")) {
      t = std::atoi(env);
    }
  }
  if (t <= 0) {
    unsigned hw = std::thread::hardware_concurrency();
    t = static_cast<int>(hw == 0 ? 1 : std::min(hw, 8u));
  }
  return std::clamp(t, 1, 64);
}

void run_chunked(uint64_t total, int threads,
                 const std::function<void(int, uint64_t, uint64_t)>& fn) {
  threads = std::clamp(threads, 1, 64);
  if (total == 0) return;
  if (threads == 1 || total < 2) {
    fn(0, 0, total);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int c = 0; c < threads; ++c) {
    uint64_t begin = total * c / threads;
    uint64_t end = total * (c + 1) / threads;
    if (begin == end) continue;
    pool.emplace_back([&fn, c, begin, end] { fn(c, begin, end); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace lab
