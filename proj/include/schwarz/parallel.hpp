#pragma once

#include <cstddef>
#include <functional>

namespace schwarz {

// Worker count: SPHERICAL_SCHWARZ_THREADS if set and positive, otherwise
// hardware concurrency.
unsigned thread_count();

// Run fn(i) for i in [0, n) across worker threads. Deterministic partition
// into contiguous chunks; no work stealing, no shared state inside fn.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

// min over i of fn(i). Chunk minima are combined in index order, so the
// result does not depend on the thread count.
double parallel_min(std::size_t n, const std::function<double(std::size_t)>& fn);

double parallel_max(std::size_t n, const std::function<double(std::size_t)>& fn);

} // namespace schwarz
