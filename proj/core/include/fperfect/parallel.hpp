#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace fperfect {

struct ScanOptions {
  /// Worker count. Affects speed only: chunk boundaries are fixed by the
  /// range, and results come back in chunk order, so output is identical
  /// for any value.
  unsigned threads = 1;
};

/// Split [lo, hi) into fixed chunks of `chunk` values, apply
/// fn(chunk_lo, chunk_hi) -> ChunkResult to each across opts.threads
/// workers, and return the per-chunk results in chunk order.
template <typename ChunkResult, typename Fn>
std::vector<ChunkResult> scan_chunks(std::uint64_t lo, std::uint64_t hi,
                                     std::uint64_t chunk,
                                     const ScanOptions& opts, Fn fn) {
  std::vector<ChunkResult> results;
  if (hi <= lo || chunk == 0) return results;
  const std::uint64_t count = (hi - lo + chunk - 1) / chunk;
  results.resize(count);

  unsigned threads = std::max(1u, opts.threads);
  threads = static_cast<unsigned>(
      std::min<std::uint64_t>(threads, count));
  if (threads == 1) {
    for (std::uint64_t i = 0; i < count; ++i) {
      std::uint64_t a = lo + i * chunk;
      results[i] = fn(a, std::min(hi, a + chunk));
    }
    return results;
  }

  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    for (;;) {
      std::uint64_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count || failed.load(std::memory_order_relaxed)) return;
      std::uint64_t a = lo + i * chunk;
      try {
        results[i] = fn(a, std::min(hi, a + chunk));
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        failed.store(true, std::memory_order_relaxed);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return results;
}

/// scan_chunks for vector-valued chunks, concatenated in chunk order.
template <typename Item, typename Fn>
std::vector<Item> scan_collect(std::uint64_t lo, std::uint64_t hi,
                               std::uint64_t chunk, const ScanOptions& opts,
                               Fn fn) {
  auto parts = scan_chunks<std::vector<Item>>(lo, hi, chunk, opts, fn);
  std::vector<Item> out;
  for (auto& part : parts) {
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace fperfect
