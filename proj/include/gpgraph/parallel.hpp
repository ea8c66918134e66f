#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace gpgraph {

// Runs fn(i) for i in [0, count) on `jobs` threads pulling indices from a
// shared counter. jobs <= 1 runs inline. The first exception thrown by any
// task is rethrown on the caller thread after all workers stop.
template <class Fn>
void parallel_for_index(int jobs, std::int64_t count, Fn&& fn) {
    if (count <= 0) return;
    if (jobs <= 1 || count == 1) {
        for (std::int64_t i = 0; i < count; ++i) fn(i);
        return;
    }

    std::atomic<std::int64_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mu;

    auto worker = [&] {
        while (!failed.load(std::memory_order_relaxed)) {
            std::int64_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!error) error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    int n_threads = static_cast<int>(std::min<std::int64_t>(jobs, count));
    pool.reserve(static_cast<std::size_t>(n_threads));
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace gpgraph
