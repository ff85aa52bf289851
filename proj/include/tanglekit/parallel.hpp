#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace tanglekit {

// Runs work(begin, end, worker) over contiguous slices of [0, count). With
// threads <= 1 everything happens on the calling thread. Callers merge
// per-worker results themselves, so output never depends on scheduling.
template <typename Work>
void parallel_slices(std::size_t count, int threads, Work&& work) {
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), count));
  if (workers == 1) {
    work(std::size_t{0}, count, std::size_t{0});
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(count, w * chunk);
    const std::size_t end = std::min(count, begin + chunk);
    pool.emplace_back([&work, begin, end, w] { work(begin, end, w); });
  }
}

}  // namespace tanglekit
