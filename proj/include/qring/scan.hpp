#pragma once

#include <array>
#include <atomic>
#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace qring {

/// Worker count for partitioned scans: QRING_WORKERS when set (1..64),
/// otherwise the hardware concurrency (at least 1).
std::size_t worker_count();

/// [0, n) as at most k contiguous chunks of near-equal length.
std::vector<std::pair<std::size_t, std::size_t>> split_range(std::size_t n, std::size_t k);

/// Runs body(chunk, begin, end) for every chunk, spread over workers. The
/// partition depends only on n and the worker count, and chunks are indexed
/// in scan order, so chunk-local results can be merged deterministically.
void run_chunked(std::size_t n,
                 const std::function<void(std::size_t, std::size_t, std::size_t)>& body);

// ---------------------------------------------------------------------------
// Witness scans. Pair and triple scans are chunked over the outer index; each
// chunk records its first violation and later chunks abort once an earlier
// one has reported, so the merged result is the scan-order-minimal witness
// for any worker count.

template <class Violates>
std::optional<std::array<std::size_t, 1>> scan_one(std::size_t n, Violates&& violates) {
  for (std::size_t i = 0; i < n; ++i)
    if (violates(i)) return std::array<std::size_t, 1>{i};
  return std::nullopt;
}

template <class Violates>
std::optional<std::array<std::size_t, 2>> scan_pairs(std::size_t n, Violates&& violates) {
  std::vector<std::optional<std::array<std::size_t, 2>>> slot(worker_count());
  std::atomic<std::size_t> best{static_cast<std::size_t>(-1)};
  run_chunked(n, [&](std::size_t c, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      if (best.load(std::memory_order_relaxed) < c) return;
      for (std::size_t j = 0; j < n; ++j) {
        if (violates(i, j)) {
          slot[c] = std::array<std::size_t, 2>{i, j};
          std::size_t cur = best.load();
          while (cur > c && !best.compare_exchange_weak(cur, c)) {
          }
          return;
        }
      }
    }
  });
  for (const auto& s : slot)
    if (s) return *s;
  return std::nullopt;
}

template <class Violates>
std::optional<std::array<std::size_t, 3>> scan_triples(std::size_t n, Violates&& violates) {
  std::vector<std::optional<std::array<std::size_t, 3>>> slot(worker_count());
  std::atomic<std::size_t> best{static_cast<std::size_t>(-1)};
  run_chunked(n, [&](std::size_t c, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      if (best.load(std::memory_order_relaxed) < c) return;
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          if (violates(i, j, k)) {
            slot[c] = std::array<std::size_t, 3>{i, j, k};
            std::size_t cur = best.load();
            while (cur > c && !best.compare_exchange_weak(cur, c)) {
            }
            return;
          }
        }
      }
    }
  });
  for (const auto& s : slot)
    if (s) return *s;
  return std::nullopt;
}

} // namespace qring
