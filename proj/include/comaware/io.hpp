#ifndef COMAWARE_IO_HPP
#define COMAWARE_IO_HPP

#include <algorithm>
#include <array>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "errors.hpp"
#include "graph.hpp"
#include "growth.hpp"

namespace comaware {

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

inline std::optional<std::uint64_t> parse_uint(std::string_view s) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
        return std::nullopt;
    }
    return v;
}

} // namespace detail

/// Reads an undirected edge list.
///
/// Format: an optional `# n=<N>` header, then one `u v` pair per line.
/// Blank lines and other `#` lines are ignored. With a header, ids must lie
/// in [0, N) and are kept as-is, so isolated nodes survive. Without one,
/// the distinct ids are renumbered densely in numeric order. All nodes get
/// community 0.
inline Graph read_edge_list(std::istream& in) {
    std::optional<std::uint64_t> declared;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
    std::vector<std::size_t> raw_line;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto t = detail::trim(line);
        if (t.empty()) {
            continue;
        }
        if (t.front() == '#') {
            const auto body = detail::trim(t.substr(1));
            if (body.starts_with("n=")) {
                if (declared || !raw.empty()) {
                    throw ParseError(lineno, "node-count header must appear once, before any edge");
                }
                declared = detail::parse_uint(detail::trim(body.substr(2)));
                if (!declared) {
                    throw ParseError(lineno, "malformed node-count header '" + std::string(t) + "'");
                }
            }
            continue;
        }
        std::istringstream fields{std::string(t)};
        std::string a, b, extra;
        fields >> a >> b;
        const auto u = detail::parse_uint(a);
        const auto v = detail::parse_uint(b);
        if (!u || !v || (fields >> extra)) {
            throw ParseError(lineno, "expected two non-negative integer ids, got '" + std::string(t) + "'");
        }
        raw.emplace_back(*u, *v);
        raw_line.push_back(lineno);
    }

    std::vector<std::uint64_t> ids;
    if (declared) {
        for (std::size_t i = 0; i < raw.size(); ++i) {
            if (std::max(raw[i].first, raw[i].second) >= *declared) {
                throw DataError("line " + std::to_string(raw_line[i]) + ": node id exceeds declared n=" +
                                std::to_string(*declared));
            }
        }
    } else {
        for (const auto& [u, v] : raw) {
            ids.push_back(u);
            ids.push_back(v);
        }
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    }
    const auto dense = [&](std::uint64_t id) {
        if (declared) {
            return static_cast<NodeId>(id);
        }
        return static_cast<NodeId>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
    };

    Graph g;
    const std::size_t n = declared ? static_cast<std::size_t>(*declared) : ids.size();
    for (std::size_t i = 0; i < n; ++i) {
        g.add_node(0);
    }
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const auto [u, v] = raw[i];
        if (u == v) {
            throw DataError("line " + std::to_string(raw_line[i]) + ": self-loop on node " + std::to_string(u));
        }
        if (!g.add_edge(dense(u), dense(v))) {
            throw DataError("line " + std::to_string(raw_line[i]) + ": duplicate edge " + std::to_string(u) + " " +
                            std::to_string(v));
        }
    }
    return g;
}

inline Graph load_edge_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    return read_edge_list(in);
}

/// `# n=<N>` header then "u v" lines with u < v, sorted.
inline void write_edge_list(const Graph& g, std::ostream& out) {
    out << "# n=" << g.node_count() << '\n';
    for (const auto& [u, v] : g.edges()) {
        out << u << ' ' << v << '\n';
    }
}

inline void write_edge_list(const Graph& g, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    write_edge_list(g, out);
    if (!out) {
        throw std::runtime_error("write failed for " + path.string());
    }
}

inline constexpr std::array<const char*, 10> kConfigKeys{
    "n", "m", "community_probs", "comp", "rp_n", "pp_n", "rp_e", "pp_e", "c3p_e", "c4p_e"};

/// Parses a JSON growth configuration. Unknown, missing or mistyped keys
/// are reported together as a ValidationError; value ranges are not checked
/// here (see validate_params).
inline GrowthParams parse_config(const nlohmann::json& j) {
    std::vector<std::string> issues;
    if (!j.is_object()) {
        throw ValidationError({"config: top level must be an object"});
    }
    for (const auto& [key, _] : j.items()) {
        if (std::find_if(kConfigKeys.begin(), kConfigKeys.end(), [&](const char* k) { return key == k; }) ==
            kConfigKeys.end()) {
            issues.push_back(key + ": unknown key");
        }
    }
    GrowthParams p;
    const auto count = [&](const char* key, std::size_t& dst) {
        if (!j.contains(key)) {
            issues.push_back(std::string(key) + ": missing");
        } else if (!j[key].is_number_unsigned() && !(j[key].is_number_integer() && j[key].get<std::int64_t>() >= 0)) {
            issues.push_back(std::string(key) + ": must be a non-negative integer");
        } else {
            dst = j[key].get<std::size_t>();
        }
    };
    const auto real = [&](const char* key, double& dst) {
        if (!j.contains(key)) {
            issues.push_back(std::string(key) + ": missing");
        } else if (!j[key].is_number()) {
            issues.push_back(std::string(key) + ": must be a number");
        } else {
            dst = j[key].get<double>();
        }
    };
    count("n", p.n);
    count("m", p.m);
    if (!j.contains("community_probs")) {
        issues.push_back("community_probs: missing");
    } else if (!j["community_probs"].is_array() ||
               !std::all_of(j["community_probs"].begin(), j["community_probs"].end(),
                            [](const nlohmann::json& e) { return e.is_number(); })) {
        issues.push_back("community_probs: must be an array of numbers");
    } else {
        p.community_probs = j["community_probs"].get<std::vector<double>>();
    }
    real("comp", p.comp);
    real("rp_n", p.rp_n);
    real("pp_n", p.pp_n);
    real("rp_e", p.rp_e);
    real("pp_e", p.pp_e);
    real("c3p_e", p.c3p_e);
    real("c4p_e", p.c4p_e);
    if (!issues.empty()) {
        throw ValidationError(std::move(issues));
    }
    return p;
}

inline GrowthParams load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError({std::string("config: ") + e.what()});
    }
    return parse_config(j);
}

inline nlohmann::json to_json(const GrowthParams& p) {
    return {{"n", p.n},       {"m", p.m},       {"community_probs", p.community_probs},
            {"comp", p.comp}, {"rp_n", p.rp_n}, {"pp_n", p.pp_n},
            {"rp_e", p.rp_e}, {"pp_e", p.pp_e}, {"c3p_e", p.c3p_e},
            {"c4p_e", p.c4p_e}};
}

} // namespace comaware

#endif // COMAWARE_IO_HPP
