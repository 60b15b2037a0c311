#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace cosdyn {

/// Runs body(i) for i in [0, count) on a small thread pool. Results must be
/// written to disjoint, preallocated slots so the reduction stays
/// deterministic. The first exception thrown by any body is rethrown here.
inline void parallel_for_index(std::size_t count, const std::function<void(std::size_t)>& body) {
    if (count == 0) return;
    const std::size_t hw = std::thread::hardware_concurrency();
    const std::size_t workers = std::min({count, hw == 0 ? std::size_t{1} : hw, std::size_t{8}});
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(workers);
    threads.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) {
        threads.emplace_back([&, t] {
            try {
                for (std::size_t i = t; i < count; i += workers) body(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : threads) th.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace cosdyn
