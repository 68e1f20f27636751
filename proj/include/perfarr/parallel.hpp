#pragma once

#include <cstdint>
#include <functional>

namespace perfarr {

/// Worker threads used by the parallel sweeps. Defaults to the hardware
/// concurrency; the PERFECT_ARRAYS_THREADS environment variable caps it
/// (a value of 1 forces sequential execution).
std::size_t worker_count();

/// Splits [0, n) into contiguous chunks, one per worker. Results must be
/// written to disjoint, preallocated slots so the outcome is identical to a
/// sequential run regardless of the degree of parallelism.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& chunk);

} // namespace perfarr
