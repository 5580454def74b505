#pragma once

#include <cstddef>
#include <functional>

namespace rewire {

/// Worker count from REWIRE_THREADS (0 or unset = hardware concurrency).
size_t worker_count();

/// Runs body(i) for i in [0, count) across worker_count() threads.
/// Returns after every call has finished. The first exception thrown is rethrown.
void parallel_for(size_t count, const std::function<void(size_t)> &body);

}  // namespace rewire
