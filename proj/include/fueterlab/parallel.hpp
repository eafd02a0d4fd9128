#pragma once

#include <cstddef>
#include <functional>

namespace fueterlab {

/// Worker count: hardware concurrency, capped by FUETERLAB_THREADS when set to a positive integer.
unsigned worker_count();

/// Calls body(i) for i in [0, n) across worker threads. Each index is visited exactly once;
/// the first exception thrown by any body is rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace fueterlab
