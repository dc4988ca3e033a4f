#ifndef COMAWARE_FASTGREEDY_HPP
#define COMAWARE_FASTGREEDY_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "metrics.hpp"

namespace comaware {

struct Partition {
    std::vector<std::size_t> labels; // dense in [0, community_count)
    std::size_t community_count = 0;
    double q = 0.0;
};

struct Merge {
    std::size_t absorbing = 0; // smaller community index, keeps its id
    std::size_t absorbed = 0;
    double q_after = 0.0;

    friend bool operator==(const Merge&, const Merge&) = default;
};

using MergeHistory = std::vector<Merge>;

struct FastGreedyResult {
    Partition partition;
    MergeHistory history;
};

/// Greedy agglomerative modularity maximisation (Clauset, Newman & Moore).
///
/// Starts from singletons and repeatedly merges the pair of adjacent
/// communities with the largest modularity gain until no adjacent pair is
/// left, then returns the partition at the best Q seen along the way.
/// Community i initially holds node i; a merge keeps the smaller index.
/// Ties go to the lexicographically smallest (i, j).
///
/// Gains are tracked as exact integers, 4m^2 * Q, so tie-breaking does not
/// depend on rounding.
inline FastGreedyResult fast_greedy_communities(const Graph& g) {
    const std::size_t n = g.node_count();
    const std::int64_t m = static_cast<std::int64_t>(g.edge_count());
    if (m == 0) {
        throw UndefinedValueError("fast greedy: graph has no edges");
    }

    // between[i][j] = number of edges joining communities i and j (i != j)
    std::vector<std::map<std::size_t, std::int64_t>> between(n);
    std::vector<std::int64_t> degree_sum(n);
    std::int64_t q_scaled = 0; // 4 m^2 Q
    for (NodeId u = 0; u < n; ++u) {
        degree_sum[u] = static_cast<std::int64_t>(g.degree(u));
        q_scaled -= degree_sum[u] * degree_sum[u];
        for (NodeId v : g.neighbors(u)) {
            between[u][v] = 1;
        }
    }
    const double scale = 4.0 * static_cast<double>(m) * static_cast<double>(m);

    MergeHistory history;
    std::int64_t best_q = q_scaled;
    std::size_t best_step = 0;
    for (;;) {
        bool found = false;
        std::int64_t best_gain = 0;
        std::size_t bi = 0;
        std::size_t bj = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (auto it = between[i].upper_bound(i); it != between[i].end(); ++it) {
                // 4m^2 * dQ = 2 (2m e_ij - d_i d_j)
                const std::int64_t gain = 2 * (2 * m * it->second - degree_sum[i] * degree_sum[it->first]);
                if (!found || gain > best_gain) {
                    found = true;
                    best_gain = gain;
                    bi = i;
                    bj = it->first;
                }
            }
        }
        if (!found) {
            break;
        }

        for (const auto& [c, w] : between[bj]) {
            if (c == bi) {
                continue;
            }
            between[bi][c] += w;
            between[c].erase(bj);
            between[c][bi] += w;
        }
        between[bi].erase(bj);
        between[bj].clear();
        degree_sum[bi] += degree_sum[bj];
        degree_sum[bj] = 0;
        q_scaled += best_gain;

        history.push_back({bi, bj, static_cast<double>(q_scaled) / scale});
        if (q_scaled > best_q) {
            best_q = q_scaled;
            best_step = history.size();
        }
    }

    // Replay the first best_step merges.
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    for (std::size_t s = 0; s < best_step; ++s) {
        parent[history[s].absorbed] = history[s].absorbing;
    }
    const auto root = [&](std::size_t x) {
        while (parent[x] != x) {
            x = parent[x];
        }
        return x;
    };

    Partition p;
    p.labels.resize(n);
    std::vector<std::size_t> dense(n, kUnreached);
    for (std::size_t u = 0; u < n; ++u) {
        const std::size_t r = root(u);
        if (dense[r] == kUnreached) {
            dense[r] = p.community_count++;
        }
        p.labels[u] = dense[r];
    }
    p.q = modularity(g, p.labels);
    return {std::move(p), std::move(history)};
}

} // namespace comaware

#endif // COMAWARE_FASTGREEDY_HPP
