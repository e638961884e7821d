#include "tfl/runtime.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace tfl {

std::size_t thread_cap() {
    static const std::size_t cap = [] {
        std::size_t hw = std::thread::hardware_concurrency();
        if (hw == 0) hw = 1;
        const char* env = std::getenv("TFLOCAL_THREADS");
        if (env != nullptr) {
            long v = std::strtol(env, nullptr, 10);
            if (v < 1) v = 1;
            if (static_cast<std::size_t>(v) < hw) hw = static_cast<std::size_t>(v);
        }
        return hw;
    }();
    return cap;
}

void parallel_chunks(std::size_t total, std::size_t chunk,
                     const std::function<void(std::size_t, std::size_t)>& fn) {
    if (total == 0) return;
    if (chunk == 0) chunk = 1;
    const std::size_t nchunks = (total + chunk - 1) / chunk;
    const std::size_t nthreads = std::min(thread_cap(), nchunks);
    if (nthreads <= 1) {
        for (std::size_t c = 0; c < nchunks; ++c)
            fn(c * chunk, std::min(total, (c + 1) * chunk));
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (std::size_t w = 0; w < nthreads; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t c = next.fetch_add(1);
                if (c >= nchunks) return;
                fn(c * chunk, std::min(total, (c + 1) * chunk));
            }
        });
    }
    for (std::thread& t : pool) t.join();
}

} // namespace tfl
