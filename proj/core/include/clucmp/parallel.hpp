#pragma once

#include <cstddef>
#include <functional>

namespace clucmp {

/// Worker count: hardware concurrency, capped by the CLUCMP_THREADS
/// environment variable when it holds a positive integer.
std::size_t default_worker_count();

/// Runs body(i) for i in [0, n) on up to `workers` threads. Work is split into
/// contiguous blocks; callers must write results to per-index slots. The first
/// exception thrown by any worker is rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body,
                  std::size_t workers = default_worker_count());

}  // namespace clucmp
