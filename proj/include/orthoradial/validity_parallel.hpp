#pragma once

#include <atomic>
#include <mutex>
#include <thread>

#include "orthoradial/validity.hpp"

namespace orthoradial::detail {

// Schedule-independent parallel search: every thread walks its share of
// start darts in ascending order and results reduce to the lowest start
// dart, so the outcome matches the sequential scan.
inline std::optional<CycleLabeling> find_decreasing_parallel(const OrthoRadialRep& rep,
                                                             int jobs) {
    const DartId n = static_cast<DartId>(rep.graph.dart_count());
    std::atomic<DartId> best_start{n};
    std::mutex mu;
    std::optional<CycleLabeling> best;
    auto worker = [&](int id) {
        for (DartId d = id; d < n; d += jobs) {
            if (d >= best_start.load(std::memory_order_relaxed)) continue;
            auto st = left_first_dfs(rep, d);
            if (!st.candidate || !verify_decreasing(rep, *st.candidate)) continue;
            CycleLabeling l = labeling(rep, *st.candidate);
            std::lock_guard<std::mutex> lock(mu);
            if (d < best_start.load(std::memory_order_relaxed)) {
                best_start.store(d, std::memory_order_relaxed);
                best = std::move(l);
            }
        }
    };
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(jobs));
    for (int i = 0; i < jobs; ++i) threads.emplace_back(worker, i);
    for (auto& t : threads) t.join();
    return best;
}

}  // namespace orthoradial::detail
