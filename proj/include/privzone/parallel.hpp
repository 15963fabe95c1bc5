#pragma once

#include <cstddef>
#include <functional>

namespace privzone {

/// Environment variable fixing the worker count.
inline constexpr const char* kThreadsEnvVar = "PRIVZONE_THREADS";

/// Worker count: PRIVZONE_THREADS when set to a positive integer, the
/// hardware concurrency otherwise.
std::size_t worker_count();

/**
 * Runs body(i) for i in [0, n). Iterations may run concurrently, so the
 * body must only write to slots owned by index i. Calls issued from inside
 * a running parallel_for execute serially on the calling thread.
 */
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace privzone
