#ifndef Z4SD_CORE_PARALLEL_HPP
#define Z4SD_CORE_PARALLEL_HPP

#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace z4sd {

inline uint32_t default_threads() {
    uint32_t h = std::thread::hardware_concurrency();
    return h ? h : 1;
}

// Runs fn(task) for every task in [0, tasks). Tasks must write only to
// per-task slots so the result is independent of scheduling. The first
// exception thrown by a task is rethrown after all workers join.
inline void parallel_tasks(uint64_t tasks, uint32_t threads,
                           const std::function<void(uint64_t)>& fn) {
    if (threads <= 1 || tasks <= 1) {
        for (uint64_t t = 0; t < tasks; ++t) fn(t);
        return;
    }
    uint32_t workers = static_cast<uint32_t>(std::min<uint64_t>(threads, tasks));
    std::atomic<uint64_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex err_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (uint32_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                uint64_t t = next.fetch_add(1, std::memory_order_relaxed);
                if (t >= tasks || failed.load(std::memory_order_relaxed)) return;
                try {
                    fn(t);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (!first_error) first_error = std::current_exception();
                    failed.store(true, std::memory_order_relaxed);
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace z4sd

#endif
