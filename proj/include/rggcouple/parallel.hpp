#pragma once

#include <exception>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

namespace rgg {

// Runs fn(i) for i in [0, trials) and returns the results in index order.
// `workers` only partitions the index set (worker w takes i = w, w+workers,
// ...); fn must depend on nothing but its index, so the output is identical
// for every worker count. The first exception thrown by any worker is
// rethrown after all workers join.
template <typename Fn>
auto run_trials(int trials, int workers, Fn&& fn)
    -> std::vector<decltype(fn(0))> {
    using T = decltype(fn(0));
    if (trials < 0) throw std::domain_error("run_trials: negative trial count");
    if (workers < 1) workers = 1;

    std::vector<std::optional<T>> slots(static_cast<std::size_t>(trials));
    if (workers == 1 || trials <= 1) {
        for (int i = 0; i < trials; ++i) slots[static_cast<std::size_t>(i)] = fn(i);
    } else {
        if (workers > trials) workers = trials;
        std::mutex err_mutex;
        std::exception_ptr first_error;
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w]() {
                try {
                    for (int i = w; i < trials; i += workers)
                        slots[static_cast<std::size_t>(i)] = fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        if (first_error) std::rethrow_exception(first_error);
    }

    std::vector<T> out;
    out.reserve(static_cast<std::size_t>(trials));
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

}  // namespace rgg
