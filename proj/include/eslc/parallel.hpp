#pragma once

#include <functional>

namespace eslc {

/// Number of hardware threads, at least 1.
int default_thread_count();

/// Runs fn(i) for i in [0, n) on up to `threads` workers. Callers write
/// results into per-index slots, so the outcome does not depend on the
/// schedule; any reduction happens afterwards in index order.
void parallel_for(int n, int threads, const std::function<void(int)>& fn);

}  // namespace eslc
