// Deterministic chunked parallelism: work is split into fixed-size chunks
// and results depend only on the chunk plan, never on the thread count.
#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace cpcop {

inline void parallel_chunks(std::size_t n, std::size_t chunk_size,
                            const std::function<void(std::size_t chunk, std::size_t begin,
                                                     std::size_t end)>& body) {
    if (n == 0) return;
    if (chunk_size == 0) chunk_size = 1;
    const std::size_t nchunks = (n + chunk_size - 1) / chunk_size;

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t nthreads = std::min<std::size_t>(hw, nchunks);
    if (nthreads <= 1) {
        for (std::size_t c = 0; c < nchunks; ++c) {
            body(c, c * chunk_size, std::min(n, (c + 1) * chunk_size));
        }
        return;
    }

    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    std::exception_ptr error;
    std::mutex error_mtx;
    for (std::size_t t = 0; t < nthreads; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t c = next.fetch_add(1);
                if (c >= nchunks) return;
                try {
                    body(c, c * chunk_size, std::min(n, (c + 1) * chunk_size));
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mtx);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace cpcop
