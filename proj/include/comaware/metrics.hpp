#ifndef COMAWARE_METRICS_HPP
#define COMAWARE_METRICS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace comaware {

/// Number of triangles, each counted once.
inline std::uint64_t triangle_count(const Graph& g) {
    std::uint64_t count = 0;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        const auto nu = g.neighbors(u);
        for (NodeId v : nu) {
            if (v <= u) {
                continue;
            }
            // |N(u) ∩ N(v)| restricted to w > v
            const auto nv = g.neighbors(v);
            auto a = std::upper_bound(nu.begin(), nu.end(), v);
            auto b = std::upper_bound(nv.begin(), nv.end(), v);
            while (a != nu.end() && b != nv.end()) {
                if (*a < *b) {
                    ++a;
                } else if (*b < *a) {
                    ++b;
                } else {
                    ++count;
                    ++a;
                    ++b;
                }
            }
        }
    }
    return count;
}

/// Global transitivity: 3 * triangles / connected triples, 0 without triples.
inline double global_clustering(const Graph& g) {
    std::uint64_t triples = 0;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        const std::uint64_t d = g.degree(u);
        if (d > 1) {
            triples += d * (d - 1) / 2;
        }
    }
    if (triples == 0) {
        return 0.0;
    }
    return 3.0 * static_cast<double>(triangle_count(g)) / static_cast<double>(triples);
}

/// Distance summary over all unordered pairs at finite distance.
struct PathSummary {
    std::uint64_t pairs = 0;
    std::uint64_t total_hops = 0;
    std::size_t max_hops = 0;
};

inline PathSummary path_summary(const Graph& g) {
    PathSummary s;
    std::vector<std::size_t> dist;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        for (NodeId v : detail::bfs_fill(g, u, dist)) {
            if (v > u) {
                ++s.pairs;
                s.total_hops += dist[v];
                s.max_hops = std::max(s.max_hops, dist[v]);
            }
        }
    }
    return s;
}

/// Mean hop count over connected pairs; disconnected pairs are excluded.
inline double average_path_length(const Graph& g) {
    const auto s = path_summary(g);
    if (s.pairs == 0) {
        throw UndefinedValueError("average path length: graph has no connected pair");
    }
    return static_cast<double>(s.total_hops) / static_cast<double>(s.pairs);
}

/// Largest finite shortest-path distance.
inline std::size_t diameter(const Graph& g) {
    if (g.edge_count() == 0) {
        throw UndefinedValueError("diameter: graph has no edges");
    }
    return path_summary(g).max_hops;
}

/// Newman modularity of a node labelling:
/// Q = sum_c [ e_c / m - (d_c / 2m)^2 ].
inline double modularity(const Graph& g, std::span<const std::size_t> labels) {
    if (labels.size() != g.node_count()) {
        throw std::invalid_argument("modularity: partition must label every node");
    }
    if (g.edge_count() == 0) {
        throw UndefinedValueError("modularity: graph has no edges");
    }
    const std::size_t groups = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
    std::vector<std::uint64_t> intra(groups, 0);
    std::vector<std::uint64_t> degree_sum(groups, 0);
    for (NodeId u = 0; u < g.node_count(); ++u) {
        degree_sum[labels[u]] += g.degree(u);
        for (NodeId v : g.neighbors(u)) {
            if (u < v && labels[u] == labels[v]) {
                ++intra[labels[u]];
            }
        }
    }
    const double m = static_cast<double>(g.edge_count());
    double q = 0.0;
    for (std::size_t c = 0; c < groups; ++c) {
        const double share = static_cast<double>(degree_sum[c]) / (2.0 * m);
        q += static_cast<double>(intra[c]) / m - share * share;
    }
    return q;
}

/// Degree of every node, in id order.
inline std::vector<std::size_t> degree_sequence(const Graph& g) {
    std::vector<std::size_t> out(g.node_count());
    for (NodeId u = 0; u < g.node_count(); ++u) {
        out[u] = g.degree(u);
    }
    return out;
}

} // namespace comaware

#endif // COMAWARE_METRICS_HPP
