#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace csrbf::detail {

inline unsigned default_threads(unsigned requested, std::size_t work_items) {
  unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  n = std::min<std::size_t>(n, work_items ? work_items : 1);
  return std::max(1u, n);
}

/// Runs fn(begin, end) over contiguous chunks of [0, n). Each index must be
/// independent of the others; results then do not depend on the thread
/// count.
template <typename Fn>
void parallel_chunks(std::size_t n, unsigned threads, Fn&& fn) {
  threads = default_threads(threads, n);
  if (threads <= 1 || n < 2) {
    fn(std::size_t{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  const std::size_t chunk = (n + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t begin = t * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace csrbf::detail
