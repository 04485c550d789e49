#pragma once

#include <cstddef>
#include <exception>
#include <functional>

namespace ballspec {

/// Worker count from BALLSPEC_THREADS (unset or 0 means hardware concurrency).
unsigned thread_count();

/// Calls body(i) for i in [0, n) on up to thread_count() threads. Results must
/// be written to per-index slots; the first exception by index is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace ballspec
