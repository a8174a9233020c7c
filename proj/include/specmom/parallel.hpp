#pragma once

#include <cstddef>
#include <functional>

namespace specmom {

/// Worker count from SPECMOM_THREADS (0 or unset: hardware concurrency).
unsigned thread_count();

/// Runs body(i) for i in [0, n) across thread_count() workers. Each index is
/// visited exactly once; body must be safe to run concurrently.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace specmom
