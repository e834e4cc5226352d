#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace conifold {

// Worker count for check batches: hardware concurrency, capped by the
// CONIFOLD_WORKERS environment variable.
inline unsigned worker_count() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("CONIFOLD_WORKERS")) {
        long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) n = std::min<unsigned>(n, (unsigned)cap);
    }
    return n;
}

// Runs work(i) -> Result over i in [0, n) on the worker pool and returns the
// results indexed by i, so any reduction downstream is deterministic.
template <typename Result, typename Work>
std::vector<Result> parallel_map(size_t n, Work work) {
    std::vector<Result> results(n);
    unsigned workers = std::min<size_t>(worker_count(), n ? n : 1);
    if (workers <= 1) {
        for (size_t i = 0; i < n; ++i) results[i] = work(i);
        return results;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1))
                results[i] = work(i);
        });
    for (auto& t : pool) t.join();
    return results;
}

}  // namespace conifold
