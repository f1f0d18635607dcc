#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace fracgreen::detail {

// Index-parallel loop; each index writes its own slot, so results are
// deterministic regardless of the thread count.
template <class F>
void parallel_for(std::size_t n, int threads, F&& fn) {
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const int workers = static_cast<int>(std::min<std::size_t>(threads, n));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
        });
    for (auto& t : pool) t.join();
}

// FRACGREEN_THREADS caps parallelism; absent or invalid means serial.
inline int env_threads() {
    const char* s = std::getenv("FRACGREEN_THREADS");
    if (!s) return 1;
    const long v = std::strtol(s, nullptr, 10);
    if (v < 1) return 1;
    return static_cast<int>(v > 256 ? 256 : v);
}

} // namespace fracgreen::detail
