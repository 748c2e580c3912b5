#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace monocert {

/// Worker count for a sweep: `requested` if nonzero, else hardware concurrency.
inline unsigned worker_count(unsigned requested) noexcept {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Evaluates fn(k) for k in [0, n) into slot k of the result. Work is split
/// into contiguous blocks, one per worker. Reductions happen afterwards over
/// the slots in index order, so results never depend on the partitioning. If
/// several indices throw, the exception of the lowest index is rethrown.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t n, unsigned threads, Fn fn) {
  std::vector<T> out(n);
  const std::size_t workers = std::min<std::size_t>(worker_count(threads), std::max<std::size_t>(n, 1));
  if (workers <= 1) {
    for (std::size_t k = 0; k < n; ++k) out[k] = fn(k);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t block = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const std::size_t lo = w * block;
      const std::size_t hi = std::min(n, lo + block);
      for (std::size_t k = lo; k < hi; ++k) {
        try {
          out[k] = fn(k);
        } catch (...) {
          errors[w] = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (std::size_t w = 0; w < workers; ++w) {
    if (errors[w]) std::rethrow_exception(errors[w]);
  }
  return out;
}

/// Counter-based generator: the value for (seed, index, lane) is a pure
/// function of its key, so samples can be drawn in any order.
inline std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline double counter_uniform(std::uint64_t seed, std::uint64_t index, std::uint64_t lane) noexcept {
  const std::uint64_t key = mix64(mix64(seed) ^ (index * 0xd1b54a32d192ed03ULL + lane));
  return static_cast<double>(key >> 11) * 0x1.0p-53;
}

}  // namespace monocert
