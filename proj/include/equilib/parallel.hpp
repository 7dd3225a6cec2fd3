#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

namespace equilib {

// Worker cap from EQUILIB_THREADS; 0 or unset means auto.
inline int thread_budget() {
    if (const char* env = std::getenv("EQUILIB_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

// Runs fn(i) for i in [0, n). Callers write results into per-index slots and
// reduce sequentially afterwards, so the result is order-independent.
template <class Fn>
void parallel_for(int n, Fn&& fn) {
    int workers = std::min(thread_budget(), n);
    if (workers <= 1 || n < 64) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (int i = w; i < n; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace equilib
