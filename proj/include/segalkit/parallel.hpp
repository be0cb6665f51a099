#pragma once

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace segalkit {

/// Worker budget for exhaustive sweeps. SEGALKIT_THREADS caps it;
/// 0 or unset means one worker per hardware thread.
inline unsigned thread_budget() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("SEGALKIT_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) return static_cast<unsigned>(v);
    }
    return hw;
}

/// Runs fn(chunk_index, begin, end) over [0, n) split into contiguous
/// chunks, one per worker. Results must be merged by chunk index by the
/// caller so that the outcome is independent of scheduling.
template <class Fn>
void parallel_chunks(int n, Fn&& fn) {
    if (n <= 0) return;
    int workers = static_cast<int>(thread_budget());
    if (workers > n) workers = n;
    if (workers <= 1) {
        fn(0, 0, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    int base = n / workers, extra = n % workers, begin = 0;
    for (int w = 0; w < workers; ++w) {
        int len = base + (w < extra ? 1 : 0);
        pool.emplace_back(fn, w, begin, begin + len);
        begin += len;
    }
    for (auto& t : pool) t.join();
}

}  // namespace segalkit
