#pragma once

// Deterministic fork-join helper: contiguous index ranges over a fixed thread
// count, callers write to disjoint slots only. Thread count comes from
// PFOLIO_THREADS (0/1 disables threading) or hardware_concurrency.

#include <cstddef>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace pfolio {

inline unsigned thread_count() {
    if (const char* env = std::getenv("PFOLIO_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 0) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

template <typename Fn>
void parallel_for(std::size_t n, Fn&& body) {
    const unsigned workers = thread_count();
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    const unsigned used = static_cast<unsigned>(std::min<std::size_t>(workers, n));
    std::vector<std::thread> pool;
    pool.reserve(used);
    for (unsigned w = 0; w < used; ++w) {
        const std::size_t lo = n * w / used;
        const std::size_t hi = n * (w + 1) / used;
        pool.emplace_back([lo, hi, &body]() {
            for (std::size_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace pfolio
