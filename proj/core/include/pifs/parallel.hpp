#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace pifs {

/// Static-chunked parallel loop. `fn(i)` must write only to slot i of any
/// shared output, so the result is identical for every worker count.
template <class Fn>
void parallel_for(std::size_t n, unsigned workers, Fn&& fn) {
  if (n == 0) return;
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const unsigned w = static_cast<unsigned>(
      std::min<std::size_t>(workers, n));
  std::vector<std::thread> pool;
  pool.reserve(w);
  for (unsigned t = 0; t < w; ++t) {
    pool.emplace_back([=, &fn] {
      for (std::size_t i = t; i < n; i += w) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace pifs
