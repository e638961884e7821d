// runtime.hpp - thread cap (TFLOCAL_THREADS) and a deterministic chunked loop.

#pragma once

#include <cstddef>
#include <functional>

namespace tfl {

// Number of worker threads allowed: min(TFLOCAL_THREADS, hardware). Defaults
// to the hardware count when the variable is unset; values < 1 read as 1.
std::size_t thread_cap();

// Runs fn(begin, end) over [0, total) in fixed chunks. Chunk boundaries do
// not depend on the thread count, so any output written per index (or per
// chunk slot) is identical for every TFLOCAL_THREADS setting.
void parallel_chunks(std::size_t total, std::size_t chunk,
                     const std::function<void(std::size_t, std::size_t)>& fn);

} // namespace tfl
