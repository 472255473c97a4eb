#pragma once

#include <functional>

namespace harmroot::detail {

/// Thread budget for data-parallel loops: HARMROOT_THREADS when set (clamped
/// to [1, 256]), otherwise std::thread::hardware_concurrency().
int thread_budget();

/// Runs fn(begin, end) over a static partition of [0, n) across the thread
/// budget. Chunk boundaries depend only on n and the budget; callers writing
/// to disjoint preallocated slots get schedule-independent results.
void parallel_for(int n, const std::function<void(int, int)>& fn);

}  // namespace harmroot::detail
