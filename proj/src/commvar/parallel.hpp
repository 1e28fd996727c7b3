#pragma once

// A minimal fork-join helper for embarrassingly parallel loops.

#include <cstddef>
#include <functional>

namespace commvar {

/// Worker count from COMMVAR_WORKERS, else the hardware concurrency (at least 1).
unsigned default_workers();

/// Runs task(i) for i in [0, n) on up to `workers` threads. Tasks must not
/// share mutable state; the first exception thrown by any task is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& task, unsigned workers = 0);

}  // namespace commvar
