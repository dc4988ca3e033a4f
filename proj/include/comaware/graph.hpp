#ifndef COMAWARE_GRAPH_HPP
#define COMAWARE_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace comaware {

using NodeId = std::uint32_t;
using Community = std::uint32_t;

enum class Scope { Global, WithinCommunity };

inline const char* to_string(Scope s) {
    return s == Scope::Global ? "global" : "within";
}

/// Undirected simple graph with one community label per node.
///
/// Node ids are dense and assigned sequentially from 0. Adjacency lists are
/// kept sorted, so neighbors() doubles as an ordered set.
class Graph {
public:
    explicit Graph(std::size_t community_count = 1) : k_(community_count) {
        if (community_count == 0) {
            throw std::invalid_argument("community count must be positive");
        }
    }

    NodeId add_node(Community c = 0) {
        if (c >= k_) {
            throw std::invalid_argument("community label " + std::to_string(c) +
                                        " out of range [0, " + std::to_string(k_) + ")");
        }
        adj_.emplace_back();
        community_.push_back(c);
        within_degree_.push_back(0);
        return static_cast<NodeId>(adj_.size() - 1);
    }

    /// Inserts {u, v}. Returns false, leaving the graph unchanged, for
    /// self-loops and already-present edges.
    bool add_edge(NodeId u, NodeId v) {
        check(u);
        check(v);
        if (u == v) {
            return false;
        }
        auto& au = adj_[u];
        auto it = std::lower_bound(au.begin(), au.end(), v);
        if (it != au.end() && *it == v) {
            return false;
        }
        au.insert(it, v);
        auto& av = adj_[v];
        av.insert(std::lower_bound(av.begin(), av.end(), u), u);
        if (community_[u] == community_[v]) {
            ++within_degree_[u];
            ++within_degree_[v];
        }
        ++edges_;
        return true;
    }

    bool has_edge(NodeId u, NodeId v) const {
        check(u);
        check(v);
        const auto& au = adj_[u];
        return std::binary_search(au.begin(), au.end(), v);
    }

    std::size_t node_count() const noexcept { return adj_.size(); }
    std::size_t edge_count() const noexcept { return edges_; }
    std::size_t community_count() const noexcept { return k_; }

    Community community_of(NodeId u) const {
        check(u);
        return community_[u];
    }

    std::span<const NodeId> neighbors(NodeId u) const {
        check(u);
        return adj_[u];
    }

    std::size_t degree(NodeId u, Scope scope = Scope::Global) const {
        check(u);
        return scope == Scope::Global ? adj_[u].size() : within_degree_[u];
    }

    /// All edges as (u, v) with u < v, in lexicographic order.
    std::vector<std::pair<NodeId, NodeId>> edges() const {
        std::vector<std::pair<NodeId, NodeId>> out;
        out.reserve(edges_);
        for (NodeId u = 0; u < adj_.size(); ++u) {
            for (NodeId v : adj_[u]) {
                if (u < v) {
                    out.emplace_back(u, v);
                }
            }
        }
        return out;
    }

    bool contains(NodeId u) const noexcept { return u < adj_.size(); }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.k_ == b.k_ && a.adj_ == b.adj_ && a.community_ == b.community_;
    }

private:
    void check(NodeId u) const {
        if (u >= adj_.size()) {
            throw std::invalid_argument("node id " + std::to_string(u) + " out of range");
        }
    }

    std::size_t k_;
    std::vector<std::vector<NodeId>> adj_;
    std::vector<Community> community_;
    std::vector<std::size_t> within_degree_;
    std::size_t edges_ = 0;
};

inline constexpr std::size_t kUnreached = static_cast<std::size_t>(-1);

namespace detail {

// Fills dist (resized to node_count) with hop counts from source, stopping
// after max_depth layers. Unreached entries hold kUnreached. Returns the
// visit order, which is sorted by distance.
inline std::vector<NodeId> bfs_fill(const Graph& g, NodeId source, std::vector<std::size_t>& dist,
                                    std::size_t max_depth = kUnreached) {
    dist.assign(g.node_count(), kUnreached);
    std::vector<NodeId> order;
    order.push_back(source);
    dist[source] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
        const NodeId u = order[head];
        if (dist[u] >= max_depth) {
            break;
        }
        for (NodeId v : g.neighbors(u)) {
            if (dist[v] == kUnreached) {
                dist[v] = dist[u] + 1;
                order.push_back(v);
            }
        }
    }
    return order;
}

} // namespace detail

/// Shortest-path hop counts from u. Unreachable nodes are absent.
inline std::map<NodeId, std::size_t> bfs_distances(const Graph& g, NodeId u) {
    if (!g.contains(u)) {
        throw std::invalid_argument("node id " + std::to_string(u) + " out of range");
    }
    std::vector<std::size_t> dist;
    std::map<NodeId, std::size_t> out;
    for (NodeId v : detail::bfs_fill(g, u, dist)) {
        out.emplace(v, dist[v]);
    }
    return out;
}

/// Nodes whose shortest-path distance from u is exactly d, sorted ascending.
inline std::vector<NodeId> nodes_at_exact_distance(const Graph& g, NodeId u, std::size_t d) {
    if (!g.contains(u)) {
        throw std::invalid_argument("node id " + std::to_string(u) + " out of range");
    }
    if (d == 0) {
        throw std::invalid_argument("distance must be positive");
    }
    std::vector<std::size_t> dist;
    std::vector<NodeId> out;
    for (NodeId v : detail::bfs_fill(g, u, dist, d)) {
        if (dist[v] == d) {
            out.push_back(v);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace comaware

#endif // COMAWARE_GRAPH_HPP
