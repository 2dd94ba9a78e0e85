#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace mcds {

inline std::uint64_t chunk_count(std::uint64_t total, std::uint64_t chunk) {
    return (total + chunk - 1) / chunk;
}

// Splits [0, total) into fixed-size chunks pulled by `workers` threads from a
// shared counter. fn(chunk_index, begin, end) must write only to per-chunk
// slots, so the merged result is independent of the worker count.
template <class Fn>
void parallel_chunks(std::uint64_t total, std::uint64_t chunk, int workers, Fn fn) {
    if (total == 0) return;
    std::uint64_t chunks = chunk_count(total, chunk);
    if (workers <= 1 || chunks == 1) {
        for (std::uint64_t c = 0; c < chunks; ++c)
            fn(c, c * chunk, std::min(total, (c + 1) * chunk));
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    int spawn = static_cast<int>(std::min<std::uint64_t>(workers, chunks));
    pool.reserve(spawn);
    for (int t = 0; t < spawn; ++t) {
        pool.emplace_back([&] {
            for (std::uint64_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1))
                fn(c, c * chunk, std::min(total, (c + 1) * chunk));
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace mcds
