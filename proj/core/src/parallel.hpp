// Chunked data parallelism with results merged in chunk order.

#ifndef OMEGA_SRC_PARALLEL_HPP_
#define OMEGA_SRC_PARALLEL_HPP_

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace omega::detail {

inline unsigned resolve_threads(unsigned threads) {
  if (threads != 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Splits [0, n) into contiguous chunks, runs fn(lo, hi, state) on each with
/// its own State, and returns the states in chunk order.
template <class State, class Fn>
std::vector<State> parallel_chunks(std::uint64_t n, unsigned threads, Fn fn) {
  const std::uint64_t chunks =
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(resolve_threads(threads), n / 4096));
  std::vector<State> states(chunks);
  const std::uint64_t size = (n + chunks - 1) / chunks;
  auto run = [&](std::uint64_t c) { fn(c * size, std::min(n, (c + 1) * size), states[c]); };
  if (chunks == 1) {
    run(0);
    return states;
  }
  std::vector<std::thread> pool;
  for (std::uint64_t c = 0; c < chunks; ++c) pool.emplace_back(run, c);
  for (auto& t : pool) t.join();
  return states;
}

}  // namespace omega::detail

#endif  // OMEGA_SRC_PARALLEL_HPP_
