#pragma once

#include <cstddef>
#include <functional>

namespace extremal {

// Number of worker threads used for data-parallel loops; honors the
// EXTREMAL_THREADS environment variable (values < 1 mean serial).
int thread_count();

// Runs fn(i) for i in [0, count). Work items must write to disjoint state;
// any reduction over the results has to happen after the call so that the
// summation order stays fixed.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

} // namespace extremal
