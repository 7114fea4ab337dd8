#pragma once

#include <cstddef>
#include <functional>

namespace fractree {

// Worker count: FRACTREE_THREADS when set to a positive integer, otherwise
// the hardware concurrency.
std::size_t worker_count();

// Calls body(i) for i in [0, n) across worker_count() threads. Work is split
// into contiguous blocks, so results written by index are deterministic. The
// first exception thrown by any worker is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace fractree
