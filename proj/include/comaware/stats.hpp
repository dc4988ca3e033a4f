#ifndef COMAWARE_STATS_HPP
#define COMAWARE_STATS_HPP

#include <array>
#include <cstddef>

#include "errors.hpp"
#include "fastgreedy.hpp"
#include "graph.hpp"
#include "metrics.hpp"
#include "powerlaw.hpp"

namespace comaware {

/// The five summary statistics of a network.
struct NetworkStats {
    double clustering_coefficient = 0.0;
    double avg_path_length = 0.0;
    double modularity = 0.0;
    double diameter = 0.0; // integral for a single graph, real for aggregates
    double power_law_exponent = 0.0;

    static constexpr std::size_t kFields = 5;

    std::array<double, kFields> as_array() const {
        return {clustering_coefficient, avg_path_length, modularity, diameter, power_law_exponent};
    }

    static NetworkStats from_array(const std::array<double, kFields>& a) {
        return {a[0], a[1], a[2], a[3], a[4]};
    }

    friend bool operator==(const NetworkStats&, const NetworkStats&) = default;
};

inline constexpr std::array<const char*, NetworkStats::kFields> kStatNames{
    "clustering_coefficient", "avg_path_length", "modularity", "diameter", "power_law_exponent"};

/// Computes all five statistics. Modularity is that of the fast-greedy
/// partition; the exponent is fitted to degrees >= xmin.
inline NetworkStats compute_stats(const Graph& g, std::size_t xmin,
                                  PowerLawEstimator estimator = PowerLawEstimator::ContinuousCorrected) {
    if (g.edge_count() == 0) {
        throw UndefinedValueError("statistics need at least one edge");
    }
    const auto paths = path_summary(g);
    NetworkStats s;
    s.clustering_coefficient = global_clustering(g);
    s.avg_path_length = static_cast<double>(paths.total_hops) / static_cast<double>(paths.pairs);
    s.diameter = static_cast<double>(paths.max_hops);
    s.modularity = fast_greedy_communities(g).partition.q;
    const auto degrees = degree_sequence(g);
    s.power_law_exponent = fit_power_law(degrees, xmin, estimator).alpha;
    return s;
}

} // namespace comaware

#endif // COMAWARE_STATS_HPP
