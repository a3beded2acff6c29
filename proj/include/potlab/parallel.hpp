#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace potlab {

// Runs fn(i) for i in [0, n) on up to `jobs` threads. Callers own the output
// slots, so results are identical for any job count; reductions happen in
// index order after the join.
template <class Fn>
void parallel_for(std::size_t n, int jobs, Fn&& fn) {
    if (n == 0) return;
    std::size_t workers = std::max(1, jobs);
    workers = std::min<std::size_t>(workers, n);
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        std::size_t lo = w * chunk;
        std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace potlab
