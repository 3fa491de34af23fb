#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <span>
#include <thread>
#include <type_traits>
#include <vector>

namespace reldens {

/// Worker count used by every parallel scan. Defaults to hardware concurrency.
std::size_t thread_count();
void set_thread_count(std::size_t n);

/// Chunk width for index scans. Fixed so that floating-point results never
/// depend on the number of threads.
inline constexpr std::uint64_t kScanChunk = std::uint64_t{1} << 16;

namespace detail {

template <class Body>
void run_workers(std::size_t jobs, Body&& body) {
  const std::size_t workers = std::min<std::size_t>(thread_count(), jobs);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto loop = [&](std::size_t worker) {
    try {
      for (std::size_t job = next++; job < jobs; job = next++) body(worker, job);
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next = jobs;
    }
  };
  if (workers <= 1) {
    loop(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(loop, w);
    loop(0);
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace detail

/// Evaluates fn(lo, hi) over consecutive half-open chunks of [first, last) and
/// returns the results in chunk order.
template <class Fn>
auto map_chunks(std::uint64_t first, std::uint64_t last, std::uint64_t chunk, Fn&& fn) {
  using Result = std::invoke_result_t<Fn&, std::uint64_t, std::uint64_t>;
  const std::uint64_t count = last > first ? (last - first + chunk - 1) / chunk : 0;
  std::vector<Result> results(count);
  detail::run_workers(count, [&](std::size_t, std::size_t job) {
    const std::uint64_t lo = first + job * chunk;
    const std::uint64_t hi = std::min(last, lo + chunk);
    results[job] = fn(lo, hi);
  });
  return results;
}

/// Per-worker accumulation for associative, commutative integer reductions.
/// fn(lo, hi, acc) folds a chunk into acc; accumulators are merged in worker order.
template <class Acc, class Fn, class Merge>
Acc reduce_chunks(std::uint64_t first, std::uint64_t last, std::uint64_t chunk, const Acc& init, Fn&& fn,
                  Merge&& merge) {
  const std::uint64_t count = last > first ? (last - first + chunk - 1) / chunk : 0;
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(thread_count(), count));
  std::vector<Acc> partial(workers, init);
  detail::run_workers(count, [&](std::size_t worker, std::size_t job) {
    const std::uint64_t lo = first + job * chunk;
    const std::uint64_t hi = std::min(last, lo + chunk);
    fn(lo, hi, partial[worker]);
  });
  Acc out = init;
  for (auto& p : partial) merge(out, p);
  return out;
}

/// Result of an ordered prefix scan: the total and the running value at each probe.
template <class Acc>
struct PrefixScan {
  Acc total{};
  std::vector<Acc> at_probes;
};

/// Scans n = 1..n_max with step(acc, n), snapshotting the running accumulator at
/// each n in `probes` (sorted ascending). Acc needs merge(const Acc&); chunks
/// are merged left to right, so the result is independent of thread count.
template <class Acc, class Step>
PrefixScan<Acc> prefix_scan(std::uint64_t n_max, std::span<const std::uint64_t> probes, Step&& step) {
  struct ChunkOut {
    Acc total{};
    std::vector<Acc> snaps;
  };
  auto chunks = map_chunks(1, n_max + 1, kScanChunk, [&](std::uint64_t lo, std::uint64_t hi) {
    ChunkOut out;
    auto probe = std::lower_bound(probes.begin(), probes.end(), lo);
    for (std::uint64_t n = lo; n < hi; ++n) {
      step(out.total, n);
      if (probe != probes.end() && *probe == n) {
        out.snaps.push_back(out.total);
        ++probe;
      }
    }
    return out;
  });
  PrefixScan<Acc> scan;
  for (auto& c : chunks) {
    for (auto& s : c.snaps) {
      Acc snap = scan.total;
      snap.merge(s);
      scan.at_probes.push_back(snap);
    }
    scan.total.merge(c.total);
  }
  return scan;
}

/// Integer counter usable with prefix_scan.
struct Count {
  std::uint64_t value = 0;
  void merge(const Count& o) { value += o.value; }
};

}  // namespace reldens
