#pragma once

#include <cstdint>
#include <functional>

namespace chromascope {

/// Worker count: CHROMASCOPE_THREADS if set and positive, otherwise the
/// hardware concurrency (at least 1).
unsigned default_worker_count();

/// Splits [0, total) into `workers` contiguous chunks and runs
/// fn(chunk_index, begin, end) for each, one thread per chunk. Chunk
/// boundaries depend only on (total, workers). The first exception thrown by
/// the lowest-indexed failing chunk is rethrown.
void parallel_chunks(std::uint64_t total, unsigned workers,
                     const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& fn);

}  // namespace chromascope
