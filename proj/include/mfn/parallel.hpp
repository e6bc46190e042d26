#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace mfn {

// Runs fn(i) for i in [0, n). Work items write only to their own slots, and
// all reductions happen afterwards in index order, so results are identical
// for every thread count.
template <class Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const std::size_t t = std::min<std::size_t>(std::size_t(threads), n);
  std::vector<std::thread> pool;
  pool.reserve(t);
  for (std::size_t w = 0; w < t; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += t) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace mfn
