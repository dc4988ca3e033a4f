#ifndef COMAWARE_REPORT_HPP
#define COMAWARE_REPORT_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "stats.hpp"

namespace comaware {

/// Per-run statistics plus mean / sample standard deviation, and optional
/// observed reference values for a diff row (mean - observed).
struct ExperimentReport {
    std::vector<NetworkStats> runs;
    std::optional<NetworkStats> observed;

    NetworkStats mean() const {
        if (runs.empty()) {
            throw std::logic_error("report has no runs");
        }
        std::array<double, NetworkStats::kFields> acc{};
        for (const auto& r : runs) {
            const auto a = r.as_array();
            for (std::size_t i = 0; i < acc.size(); ++i) {
                acc[i] += a[i];
            }
        }
        for (double& v : acc) {
            v /= static_cast<double>(runs.size());
        }
        return NetworkStats::from_array(acc);
    }

    /// Sample (n - 1) standard deviation; zero for a single run.
    NetworkStats stddev() const {
        const auto mu = mean().as_array();
        std::array<double, NetworkStats::kFields> acc{};
        if (runs.size() < 2) {
            return NetworkStats::from_array(acc);
        }
        for (const auto& r : runs) {
            const auto a = r.as_array();
            for (std::size_t i = 0; i < acc.size(); ++i) {
                acc[i] += (a[i] - mu[i]) * (a[i] - mu[i]);
            }
        }
        for (double& v : acc) {
            v = std::sqrt(v / static_cast<double>(runs.size() - 1));
        }
        return NetworkStats::from_array(acc);
    }

    std::optional<NetworkStats> diff() const {
        if (!observed) {
            return std::nullopt;
        }
        const auto mu = mean().as_array();
        const auto ob = observed->as_array();
        std::array<double, NetworkStats::kFields> d{};
        for (std::size_t i = 0; i < d.size(); ++i) {
            d[i] = mu[i] - ob[i];
        }
        return NetworkStats::from_array(d);
    }
};

inline std::string format_stat(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

inline void write_stats_row(std::ostream& out, const std::string& label, const NetworkStats& s) {
    out << label;
    for (double v : s.as_array()) {
        out << ',' << format_stat(v);
    }
    out << '\n';
}

inline void write_csv_header(std::ostream& out) {
    out << "run";
    for (const char* name : kStatNames) {
        out << ',' << name;
    }
    out << '\n';
}

/// CSV: header, one row per run (1-based), then mean, stddev and, when
/// observed values exist, observed and diff.
inline void write_report_csv(const ExperimentReport& r, std::ostream& out) {
    write_csv_header(out);
    for (std::size_t i = 0; i < r.runs.size(); ++i) {
        write_stats_row(out, std::to_string(i + 1), r.runs[i]);
    }
    write_stats_row(out, "mean", r.mean());
    write_stats_row(out, "stddev", r.stddev());
    if (r.observed) {
        write_stats_row(out, "observed", *r.observed);
        write_stats_row(out, "diff", *r.diff());
    }
}

/// Fixed-width table: one row per run, then mean, stddev and observed/diff.
inline void write_report_table(const ExperimentReport& r, std::ostream& out) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-10s %10s %10s %10s %10s %10s\n", "", "Clustering", "AvgPath", "Modularity",
                  "Diameter", "PowerLaw");
    out << buf;
    const auto row = [&](const std::string& label, const NetworkStats& s) {
        std::snprintf(buf, sizeof buf, "%-10s %10.2f %10.2f %10.2f %10.2f %10.2f\n", label.c_str(),
                      s.clustering_coefficient, s.avg_path_length, s.modularity, s.diameter, s.power_law_exponent);
        out << buf;
    };
    for (std::size_t i = 0; i < r.runs.size(); ++i) {
        row("Run#" + std::to_string(i + 1), r.runs[i]);
    }
    row("Mean", r.mean());
    row("StdDev", r.stddev());
    if (r.observed) {
        row("Observed", *r.observed);
        row("Diff.", *r.diff());
    }
}

} // namespace comaware

#endif // COMAWARE_REPORT_HPP
