#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace qls {

inline unsigned default_worker_count() {
    if (const char* s = std::getenv("QLS_WORKERS")) {
        const long v = std::strtol(s, nullptr, 10);
        if (v >= 1) return unsigned(v);
    }
    return 1;
}

/// Runs fn(i) for i in [0, n) across `workers` threads pulling chunks from a
/// shared cursor. When `stop` is non-null, workers drain once it turns true.
/// The first worker exception is rethrown on the calling thread.
template <class Fn>
void parallel_for(std::size_t n, unsigned workers, Fn&& fn, std::atomic<bool>* stop = nullptr) {
    constexpr std::size_t kChunk = 64;
    if (workers <= 1 || n <= kChunk) {
        for (std::size_t i = 0; i < n; ++i) {
            if (stop && stop->load(std::memory_order_relaxed)) return;
            fn(i);
        }
        return;
    }
    std::atomic<std::size_t> cursor{0};
    std::exception_ptr first_error;
    std::atomic<bool> failed{false};
    auto body = [&] {
        try {
            for (;;) {
                if (failed.load(std::memory_order_relaxed)) return;
                if (stop && stop->load(std::memory_order_relaxed)) return;
                const std::size_t begin = cursor.fetch_add(kChunk, std::memory_order_relaxed);
                if (begin >= n) return;
                const std::size_t end = std::min(begin + kChunk, n);
                for (std::size_t i = begin; i < end; ++i) {
                    if (stop && stop->load(std::memory_order_relaxed)) return;
                    fn(i);
                }
            }
        } catch (...) {
            if (!failed.exchange(true)) first_error = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(body);
    for (std::thread& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace qls
