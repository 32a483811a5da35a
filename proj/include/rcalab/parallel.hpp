#pragma once

// Ordered parallel map: results land in input order, so any reduction the caller
// performs afterwards is independent of the thread count.

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace rcalab {

inline std::atomic<int>& thread_count_slot() {
    static std::atomic<int> n{1};
    return n;
}

inline void set_thread_count(int n) { thread_count_slot().store(std::max(1, n)); }
inline int thread_count() { return thread_count_slot().load(); }

template <class In, class F>
auto parallel_map(const std::vector<In>& items, F fn) -> std::vector<decltype(fn(items.front()))> {
    using Out = decltype(fn(items.front()));
    std::vector<Out> out(items.size());
    const int workers = std::min<int>(thread_count(), static_cast<int>(items.size()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < items.size(); ++i) out[i] = fn(items[i]);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto body = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= items.size()) return;
            try {
                out[i] = fn(items[i]);
            } catch (...) {
                std::lock_guard lock(failure_mu);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(body);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    return out;
}

}  // namespace rcalab
