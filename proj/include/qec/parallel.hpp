#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace qec {

/// Worker cap: QEC_THREADS when set (minimum 1), otherwise the hardware
/// concurrency.
int worker_limit();

/// Runs fn(i) for i in [0, count) across worker threads. Callers store
/// results by index, so the output is identical to a serial loop no matter
/// how the indices are partitioned.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(worker_limit()), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&fn, w, workers, count] {
            for (std::size_t i = w; i < count; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace qec
