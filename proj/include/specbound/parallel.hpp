#pragma once

#include <cstddef>
#include <functional>

namespace specbound {

// Number of worker threads used by data-parallel loops. Defaults to the
// hardware concurrency, capped at 8; SPECBOUND_THREADS or set_thread_budget()
// override. Always >= 1.
int thread_budget();
void set_thread_budget(int threads);

// Runs body(begin, end) on contiguous chunks of [0, n). Each chunk writes to
// disjoint output slots only; reductions stay inside a chunk in index order,
// so results are identical at every parallelism degree.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace specbound
