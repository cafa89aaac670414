#pragma once

#include <cstddef>
#include <functional>

namespace hof {

/// Worker count: HOF_THREADS if set (clamped to >= 1), else the hardware
/// concurrency. Results of every parallel loop in this library are
/// required to be independent of this value.
int thread_count();

/// Runs fn(i) for i in [0, n) on contiguous index chunks, one chunk per
/// worker. fn must write only to slots owned by index i.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace hof
