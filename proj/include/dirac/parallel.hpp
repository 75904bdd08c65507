#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace dirac {

/// Worker-thread cap. Reads DIRAC_WALK_THREADS once; defaults to the
/// hardware concurrency.
int max_threads();

/// Runs fn(begin, end) over disjoint chunks of [0, n). Chunks never overlap,
/// so results are bit-identical for any thread count. threads_hint overrides
/// the DIRAC_WALK_THREADS cap (used by tests).
template <typename F>
void parallel_for(std::int64_t n, F&& fn, int threads_hint = 0) {
    const int cap = threads_hint > 0 ? threads_hint : max_threads();
    const int threads = static_cast<int>(std::min<std::int64_t>(cap, n));
    if (threads <= 1 || (threads_hint == 0 && n < 4096)) {
        fn(std::int64_t{0}, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    const std::int64_t chunk = (n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        const std::int64_t lo = t * chunk;
        const std::int64_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace dirac
