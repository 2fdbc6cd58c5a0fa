#pragma once

#include <cstddef>
#include <functional>

namespace tjcm {

/// Worker-thread cap: min(hardware_concurrency, TJCM_THREADS) with a floor
/// of 1. TJCM_THREADS is read once per process.
int max_threads();

/// Runs fn(i) for i in [begin, end) across worker threads. Iterations must
/// be independent; each writes only its own output slot, so results do not
/// depend on the thread count.
void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t)>& fn);

}  // namespace tjcm
