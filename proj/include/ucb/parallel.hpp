#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace ucb {

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(block_index) for every block in [0, num_blocks). Blocks are claimed
// from a shared counter; fn must write only into its own block's slot so the
// result is independent of scheduling and thread count. fn must not throw.
template <class Fn>
void parallel_blocks(std::int64_t num_blocks, int num_threads, Fn&& fn) {
  const std::int64_t want = std::min<std::int64_t>(resolve_threads(num_threads),
                                                   std::max<std::int64_t>(num_blocks, 1));
  if (want <= 1) {
    for (std::int64_t b = 0; b < num_blocks; ++b) fn(b);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(want));
  for (std::int64_t i = 0; i < want; ++i) {
    pool.emplace_back([&] {
      for (;;) {
        const std::int64_t b = next.fetch_add(1, std::memory_order_relaxed);
        if (b >= num_blocks) return;
        fn(b);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace ucb
