#ifndef DISSOC_PARALLEL_HPP
#define DISSOC_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace dissoc {

/// Worker count: explicit request > DISSOC_WORKERS env > hardware.
inline int resolve_workers(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("DISSOC_WORKERS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Apply fn to every item; results land at their input index, so the
/// output is identical for any worker count.
template <typename T, typename F>
auto parallel_map(const std::vector<T>& items, F fn, int workers = 0)
    -> std::vector<decltype(fn(items[0]))> {
    using R = decltype(fn(items[0]));
    std::vector<R> out(items.size());
    workers = resolve_workers(workers);
    if (workers <= 1 || items.size() <= 1) {
        for (std::size_t i = 0; i < items.size(); ++i) out[i] = fn(items[i]);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto run = [&] {
        try {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= items.size() || failed.load()) return;
                out[i] = fn(items[i]);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!failed.exchange(true)) error = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    int spawn = std::min<int>(workers, static_cast<int>(items.size()));
    pool.reserve(static_cast<std::size_t>(spawn));
    for (int t = 0; t < spawn; ++t) pool.emplace_back(run);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
    return out;
}

} // namespace dissoc

#endif
