#pragma once

#include <cstdlib>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace eltip::detail {

/// Worker count: ELTIP_THREADS when set and positive, otherwise the
/// hardware concurrency (at least 1).
inline unsigned worker_count() {
    if (const char* env = std::getenv("ELTIP_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1u;
}

/// Splits [0, count) into contiguous chunks, one per worker, and runs
/// fn(begin, end) on each. Chunk boundaries depend only on count and the
/// worker count's ceiling division, and every worker writes to disjoint
/// index ranges, so results are identical for any worker count. The first
/// exception thrown by any chunk is rethrown.
template <typename Fn>
void parallel_chunks(std::size_t count, Fn&& fn) {
    if (count == 0) return;
    unsigned workers = worker_count();
    if (workers <= 1 || count < 2) {
        fn(std::size_t{0}, count);
        return;
    }
    if (workers > count) workers = static_cast<unsigned>(count);
    const std::size_t chunk = (count + workers - 1) / workers;

    std::vector<std::thread> threads;
    threads.reserve(workers);
    std::exception_ptr first_error;
    std::mutex error_mutex;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t begin = static_cast<std::size_t>(w) * chunk;
        if (begin >= count) break;
        const std::size_t end = std::min(count, begin + chunk);
        threads.emplace_back([&, begin, end] {
            try {
                fn(begin, end);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace eltip::detail
