#pragma once

/// Minimal fork-join helper. Worker count comes from IPSET_THREADS when set,
/// otherwise from hardware concurrency. Callers must keep results
/// order-independent; deterministic output is enforced by sorting at merge.

#include <cstddef>
#include <functional>

namespace ipset {

/// IPSET_THREADS if set to a positive integer, else hardware concurrency.
unsigned worker_count();

/// Runs task(i) for i in [0, count) across at most `workers` threads
/// (0 = worker_count()). Blocks until every task finished; exceptions from
/// tasks are rethrown. Tasks must be safe to run concurrently.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& task,
                  unsigned workers = 0);

} // namespace ipset
