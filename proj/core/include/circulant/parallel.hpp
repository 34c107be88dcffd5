#pragma once

#include <cstddef>
#include <functional>

namespace circulant {

/// Worker count: min(CIRC_THREADS, hardware_concurrency), at least 1.
int max_threads();

/// Runs f(begin, end) on half-open index chunks across worker threads and
/// joins before returning. Chunk boundaries are deterministic, so callers
/// that write into per-index slots get reproducible results regardless of
/// scheduling. Exceptions from workers are rethrown on the calling thread.
void parallel_chunks(std::size_t count, std::size_t min_grain,
                     const std::function<void(std::size_t, std::size_t)>& f);

}  // namespace circulant
