#pragma once

#include <cstddef>
#include <functional>

namespace legnet {

/// Global worker cap honored by every parallel loop. 0 means hardware concurrency.
void set_max_threads(unsigned threads);
unsigned max_threads();

/// Runs body(i) for i in [0, count) on up to max_threads() workers. Iterations
/// are handed out dynamically; callers write results into per-index slots so
/// the outcome does not depend on scheduling. The first exception thrown by any
/// iteration is rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace legnet
