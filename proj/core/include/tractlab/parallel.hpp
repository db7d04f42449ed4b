#pragma once

#include <cstddef>
#include <functional>

namespace tractlab {

// requested > 0 wins; otherwise the TRACTLAB_JOBS environment variable;
// otherwise 1.  The result is clamped to at least 1.
int resolve_jobs(int requested);

// Splits [0, n) into at most `jobs` contiguous chunks and runs `work` on
// each, possibly concurrently.  Callers merge per-chunk results in chunk
// order, which keeps outcomes independent of scheduling.
void parallel_chunks(std::size_t n, int jobs,
                     const std::function<void(int chunk, std::size_t lo,
                                              std::size_t hi)>& work);

}  // namespace tractlab
