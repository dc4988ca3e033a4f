#ifndef COMAWARE_EXPERIMENT_HPP
#define COMAWARE_EXPERIMENT_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

#include "growth.hpp"
#include "stats.hpp"

namespace comaware {

struct RunOutput {
    std::uint64_t seed = 0;
    GrowthResult growth;
    NetworkStats stats;
};

/// Runs `runs` independent growths with seeds seed, seed+1, ... and computes
/// their statistics. Runs are spread over up to `threads` worker threads
/// (0 = hardware concurrency); results are in seed order regardless.
inline std::vector<RunOutput> run_experiment(const GrowthParams& params, std::uint64_t seed, std::size_t runs,
                                             std::size_t xmin,
                                             PowerLawEstimator estimator = PowerLawEstimator::ContinuousCorrected,
                                             std::size_t threads = 0) {
    const GrowthParams normalized = validate_params(params);
    std::vector<RunOutput> out(runs);
    std::vector<std::exception_ptr> errors(runs);
    const auto work = [&](std::size_t r) {
        try {
            out[r].seed = seed + r;
            out[r].growth = run_growth(normalized, seed + r);
            out[r].stats = compute_stats(out[r].growth.graph, xmin, estimator);
        } catch (...) {
            errors[r] = std::current_exception();
        }
    };

    if (threads == 0) {
        threads = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    }
    threads = std::min(threads, runs);
    if (threads <= 1) {
        for (std::size_t r = 0; r < runs; ++r) {
            work(r);
        }
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                for (std::size_t r = t; r < runs; r += threads) {
                    work(r);
                }
            });
        }
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return out;
}

} // namespace comaware

#endif // COMAWARE_EXPERIMENT_HPP
