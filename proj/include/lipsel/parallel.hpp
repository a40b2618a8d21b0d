#pragma once

#include <cstddef>
#include <functional>

namespace lipsel {

// Worker count: LIPSEL_THREADS if set and positive, else hardware concurrency.
std::size_t thread_count();

// Runs fn(i) for i in [0, n). Callers write results into per-index slots, so
// reductions stay independent of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace lipsel
