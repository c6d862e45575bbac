#pragma once

#include <cstddef>
#include <functional>

namespace shadecalc {

/// Worker count: hardware concurrency capped by SHADECALC_THREADS (>= 1).
unsigned thread_budget();

/// Runs body(k) for k in [0, n). Results must be written to per-index slots;
/// the first exception thrown by any body is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace shadecalc
