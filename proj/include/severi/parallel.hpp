#pragma once

#include <functional>
#include <vector>

namespace severi {

// Runs the tasks on up to `threads` workers (threads <= 1 runs inline).
// Blocks until all tasks finish; the first exception thrown by any task is
// rethrown after the join. Tasks must not depend on execution order; the
// engine memo makes concurrent queries safe.
void run_parallel(std::vector<std::function<void()>> tasks, int threads);

} // namespace severi
