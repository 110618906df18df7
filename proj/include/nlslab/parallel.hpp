#pragma once

#include <functional>

namespace nlslab {

// Worker cap: min(hardware_concurrency, NLSLAB_THREADS when set).
int worker_count();

// Runs fn(i) for i in [0, count) across workers.  Results must be written
// to preallocated slots indexed by i, so the outcome is identical for any
// worker count.  Exceptions are rethrown on the caller.
void parallel_for(int count, const std::function<void(int)>& fn);

}  // namespace nlslab
