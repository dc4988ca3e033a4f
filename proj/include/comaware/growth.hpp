#ifndef COMAWARE_GROWTH_HPP
#define COMAWARE_GROWTH_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace comaware {

using Rng = std::mt19937_64;

/// Inputs of the community-aware growth model.
///
/// Newcomer links choose between uniform (rp_n) and preferential (pp_n)
/// targets; links between existing nodes additionally allow triangle (c3p_e)
/// and quadrangle (c4p_e) closure. Weights need not sum to one.
struct GrowthParams {
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<double> community_probs;
    double comp = 0.0;
    double rp_n = 0.0;
    double pp_n = 0.0;
    double rp_e = 0.0;
    double pp_e = 0.0;
    double c3p_e = 0.0;
    double c4p_e = 0.0;

    std::size_t k() const noexcept { return community_probs.size(); }

    friend bool operator==(const GrowthParams&, const GrowthParams&) = default;
};

inline constexpr double kCommunitySumTolerance = 0.01;

/// Returns one message per violated invariant; empty when the params are usable.
inline std::vector<std::string> check_params(const GrowthParams& p) {
    std::vector<std::string> issues;
    if (p.n < 2) {
        issues.push_back("n: must be at least 2 (got " + std::to_string(p.n) + ")");
    }
    if (p.n >= 1 && p.m + 1 < p.n) {
        issues.push_back("m: must be at least n - 1 (got m=" + std::to_string(p.m) +
                         ", n=" + std::to_string(p.n) + ")");
    }
    if (p.n >= 2 && p.m > p.n * (p.n - 1) / 2) {
        issues.push_back("m: exceeds the number of node pairs n(n-1)/2");
    }
    if (p.community_probs.empty()) {
        issues.push_back("community_probs: at least one community required");
    }
    double csum = 0.0;
    bool cneg = false;
    for (double c : p.community_probs) {
        if (!(c >= 0.0) || !std::isfinite(c)) {
            cneg = true;
        }
        csum += c;
    }
    if (cneg) {
        issues.push_back("community_probs: entries must be finite and non-negative");
    } else if (!p.community_probs.empty() && std::abs(csum - 1.0) > kCommunitySumTolerance) {
        issues.push_back("community_probs: must sum to 1 (got " + std::to_string(csum) + ")");
    }
    if (!(p.comp >= 0.0 && p.comp <= 1.0)) {
        issues.push_back("comp: must lie in [0, 1]");
    }
    const auto weight = [&](double w, const char* name) {
        if (!(w >= 0.0) || !std::isfinite(w)) {
            issues.push_back(std::string(name) + ": must be finite and non-negative");
            return false;
        }
        return true;
    };
    const bool newcomer_ok = weight(p.rp_n, "rp_n") & weight(p.pp_n, "pp_n");
    const bool existing_ok = weight(p.rp_e, "rp_e") & weight(p.pp_e, "pp_e") &
                             weight(p.c3p_e, "c3p_e") & weight(p.c4p_e, "c4p_e");
    if (newcomer_ok && p.rp_n + p.pp_n <= 0.0) {
        issues.push_back("rp_n, pp_n: at least one newcomer weight must be positive");
    }
    if (existing_ok && p.rp_e + p.pp_e + p.c3p_e + p.c4p_e <= 0.0) {
        issues.push_back("rp_e, pp_e, c3p_e, c4p_e: at least one existing-node weight must be positive");
    }
    return issues;
}

/// Validates p and returns a copy with community probabilities and both
/// mechanism weight groups rescaled to sum to one.
inline GrowthParams validate_params(const GrowthParams& p) {
    auto issues = check_params(p);
    if (!issues.empty()) {
        throw ValidationError(std::move(issues));
    }
    GrowthParams out = p;
    const double csum = std::accumulate(p.community_probs.begin(), p.community_probs.end(), 0.0);
    for (double& c : out.community_probs) {
        c /= csum;
    }
    const double nsum = p.rp_n + p.pp_n;
    out.rp_n /= nsum;
    out.pp_n /= nsum;
    const double esum = p.rp_e + p.pp_e + p.c3p_e + p.c4p_e;
    out.rp_e /= esum;
    out.pp_e /= esum;
    out.c3p_e /= esum;
    out.c4p_e /= esum;
    return out;
}

/// Arrival timesteps of nodes 2..n: node i arrives at ceil((i-1) m / n).
/// Node 1 exists before timestep 1.
inline std::vector<std::size_t> arrival_schedule(std::size_t n, std::size_t m) {
    if (n < 2) {
        throw std::invalid_argument("arrival_schedule: n must be at least 2");
    }
    if (m + 1 < n) {
        throw std::invalid_argument("arrival_schedule: m must be at least n - 1");
    }
    std::vector<std::size_t> out;
    out.reserve(n - 1);
    for (std::size_t i = 2; i <= n; ++i) {
        out.push_back(((i - 1) * m + n - 1) / n);
    }
    return out;
}

namespace detail {

inline double uniform01(Rng& rng) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

// Index drawn with probability weights[i] / sum, using exactly one uniform draw.
inline std::size_t draw_weighted(std::span<const double> weights, Rng& rng) {
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    const double r = uniform01(rng) * total;
    double acc = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] <= 0.0) {
            continue;
        }
        acc += weights[i];
        last_positive = i;
        if (r < acc) {
            return i;
        }
    }
    return last_positive;
}

} // namespace detail

inline Community assign_community(std::span<const double> probs, Rng& rng) {
    return static_cast<Community>(detail::draw_weighted(probs, rng));
}

enum class Mechanism { UniformRandom, Preferential, TriangleClose, QuadrangleClose };

inline const char* to_string(Mechanism m) {
    switch (m) {
    case Mechanism::UniformRandom: return "uniform";
    case Mechanism::Preferential: return "preferential";
    case Mechanism::TriangleClose: return "triangle";
    case Mechanism::QuadrangleClose: return "quadrangle";
    }
    return "?";
}

/// Selection pool for one link attempt. An empty weights vector means the
/// pool is uniform; otherwise weights[i] belongs to nodes[i].
struct Candidates {
    std::vector<NodeId> nodes;
    std::vector<std::size_t> weights;

    bool empty() const noexcept { return nodes.empty(); }
};

/// Nodes the source may be linked to under the given mechanism and scope.
/// Already-adjacent nodes are included for uniform and preferential pools.
inline Candidates candidate_set(const Graph& g, NodeId source, Mechanism mech, Scope scope) {
    const Community own = g.community_of(source);
    const bool restrict = scope == Scope::WithinCommunity;
    Candidates out;
    switch (mech) {
    case Mechanism::UniformRandom:
    case Mechanism::Preferential:
        for (NodeId v = 0; v < g.node_count(); ++v) {
            if (v == source || (restrict && g.community_of(v) != own)) {
                continue;
            }
            out.nodes.push_back(v);
            if (mech == Mechanism::Preferential) {
                out.weights.push_back(g.degree(v, scope));
            }
        }
        break;
    case Mechanism::TriangleClose:
    case Mechanism::QuadrangleClose:
        for (NodeId v : nodes_at_exact_distance(g, source, mech == Mechanism::TriangleClose ? 2 : 3)) {
            if (!restrict || g.community_of(v) == own) {
                out.nodes.push_back(v);
            }
        }
        break;
    }
    return out;
}

enum class SkipReason { None, NoCandidates, AlreadyAdjacent };

inline const char* to_string(SkipReason r) {
    switch (r) {
    case SkipReason::None: return "";
    case SkipReason::NoCandidates: return "no_candidates";
    case SkipReason::AlreadyAdjacent: return "already_adjacent";
    }
    return "?";
}

/// One selection attempt: the drawn node (if any) and why it cannot be linked.
struct TargetDraw {
    std::optional<NodeId> drawn;
    SkipReason reason = SkipReason::None;

    bool linkable() const noexcept { return reason == SkipReason::None; }
};

/// Draws one candidate from the pool, proportionally to weight. A
/// preferential pool whose weights are all zero falls back to uniform.
inline std::optional<NodeId> draw_candidate(const Candidates& c, Rng& rng) {
    if (c.empty()) {
        return std::nullopt;
    }
    if (!c.weights.empty()) {
        const std::size_t total = std::accumulate(c.weights.begin(), c.weights.end(), std::size_t{0});
        if (total > 0) {
            std::size_t r = std::uniform_int_distribution<std::size_t>(0, total - 1)(rng);
            for (std::size_t i = 0; i < c.nodes.size(); ++i) {
                if (r < c.weights[i]) {
                    return c.nodes[i];
                }
                r -= c.weights[i];
            }
        }
    }
    return c.nodes[std::uniform_int_distribution<std::size_t>(0, c.nodes.size() - 1)(rng)];
}

inline TargetDraw draw_target(const Graph& g, NodeId source, Mechanism mech, Scope scope, Rng& rng) {
    const auto pool = candidate_set(g, source, mech, scope);
    TargetDraw out;
    out.drawn = draw_candidate(pool, rng);
    if (!out.drawn) {
        out.reason = SkipReason::NoCandidates;
    } else if (g.has_edge(source, *out.drawn)) {
        out.reason = SkipReason::AlreadyAdjacent;
    }
    return out;
}

/// One attempt, no retry: an already-adjacent draw yields nullopt.
inline std::optional<NodeId> select_target(const Graph& g, NodeId source, Mechanism mech, Scope scope,
                                           Rng& rng) {
    const auto d = draw_target(g, source, mech, scope, rng);
    return d.linkable() ? d.drawn : std::nullopt;
}

enum class StepKind { Arrival, Existing };

struct TraceRecord {
    std::size_t timestep = 0;
    StepKind kind = StepKind::Existing;
    Mechanism mechanism = Mechanism::UniformRandom;
    Scope scope = Scope::Global;
    NodeId source = 0;
    std::optional<NodeId> target; // drawn node; set for links and already-adjacent skips
    bool linked = false;
    SkipReason reason = SkipReason::None;

    friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

using GrowthTrace = std::vector<TraceRecord>;

/// Mutable simulation state. params must already be normalized.
struct GrowthState {
    GrowthParams params;
    Graph graph;
    Rng rng;
    std::size_t timestep = 0;

    GrowthState(GrowthParams normalized, std::uint64_t seed)
        : params(std::move(normalized)), graph(params.k()), rng(seed) {}
};

namespace detail {

inline Scope draw_scope(double comp, Rng& rng) {
    return uniform01(rng) < comp ? Scope::WithinCommunity : Scope::Global;
}

inline TraceRecord attempt_link(GrowthState& s, TraceRecord rec) {
    const auto d = draw_target(s.graph, rec.source, rec.mechanism, rec.scope, s.rng);
    rec.target = d.drawn;
    rec.reason = d.reason;
    if (d.linkable()) {
        rec.linked = s.graph.add_edge(rec.source, *d.drawn);
    }
    return rec;
}

} // namespace detail

/// Adds one newcomer and attempts to link it to an existing node. The
/// newcomer stays in the graph (isolated) when the attempt fails.
inline TraceRecord new_node_step(GrowthState& s) {
    if (s.graph.node_count() >= s.params.n) {
        throw std::logic_error("new_node_step: all nodes have already arrived");
    }
    TraceRecord rec;
    rec.timestep = s.timestep;
    rec.kind = StepKind::Arrival;
    rec.source = s.graph.add_node(assign_community(s.params.community_probs, s.rng));
    rec.scope = detail::draw_scope(s.params.comp, s.rng);
    const std::array<double, 2> w{s.params.rp_n, s.params.pp_n};
    rec.mechanism = detail::draw_weighted(w, s.rng) == 0 ? Mechanism::UniformRandom : Mechanism::Preferential;
    return detail::attempt_link(s, rec);
}

/// Attempts one link between a uniformly drawn existing node and a target
/// chosen by any of the four mechanisms. With a single node every pool is
/// empty and the step is skipped.
inline TraceRecord existing_edge_step(GrowthState& s) {
    if (s.graph.node_count() == 0) {
        throw std::logic_error("existing_edge_step: graph has no nodes");
    }
    TraceRecord rec;
    rec.timestep = s.timestep;
    rec.kind = StepKind::Existing;
    rec.source = static_cast<NodeId>(
        std::uniform_int_distribution<std::size_t>(0, s.graph.node_count() - 1)(s.rng));
    rec.scope = detail::draw_scope(s.params.comp, s.rng);
    const std::array<double, 4> w{s.params.rp_e, s.params.pp_e, s.params.c3p_e, s.params.c4p_e};
    rec.mechanism = static_cast<Mechanism>(detail::draw_weighted(w, s.rng));
    return detail::attempt_link(s, rec);
}

struct GrowthResult {
    Graph graph;
    GrowthTrace trace;
};

inline constexpr std::size_t kTimestepBudgetFactor = 1000;

/// Runs the model to completion: exactly n nodes and m edges.
/// Throws NonConvergenceError after 1000 m timesteps.
inline GrowthResult run_growth(const GrowthParams& params, std::uint64_t seed) {
    GrowthState s(validate_params(params), seed);
    const auto schedule = arrival_schedule(s.params.n, s.params.m);
    GrowthTrace trace;
    trace.reserve(s.params.m + s.params.m / 2);

    s.graph.add_node(assign_community(s.params.community_probs, s.rng));
    std::size_t next_arrival = 0;
    const std::size_t budget = kTimestepBudgetFactor * s.params.m;
    while (s.graph.edge_count() < s.params.m) {
        ++s.timestep;
        if (s.timestep > budget) {
            throw NonConvergenceError("growth did not reach m=" + std::to_string(s.params.m) + " edges within " +
                                      std::to_string(budget) + " timesteps (reached " +
                                      std::to_string(s.graph.edge_count()) + ")");
        }
        if (next_arrival < schedule.size() && s.timestep == schedule[next_arrival]) {
            ++next_arrival;
            trace.push_back(new_node_step(s));
        } else {
            trace.push_back(existing_edge_step(s));
        }
    }
    return {std::move(s.graph), std::move(trace)};
}

} // namespace comaware

#endif // COMAWARE_GROWTH_HPP
