#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace pointspec {

/// Runs fn(i) for i in [0, n) on `threads` workers in contiguous chunks.
/// Callers keep determinism by writing to disjoint per-index slots.
inline void parallel_for(std::uint64_t n, const std::function<void(std::uint64_t)>& fn,
                         unsigned threads = 1) {
    if (threads <= 1 || n < 2) {
        for (std::uint64_t i = 0; i < n; ++i) fn(i);
        return;
    }
    if (threads > n) threads = static_cast<unsigned>(n);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const std::uint64_t chunk = (n + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        std::uint64_t lo = t * chunk;
        std::uint64_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::uint64_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace pointspec
